#pragma once

#include <optional>
#include <vector>

#include "persw/simplicial/complex.hpp"
#include "persw/z2/bit_matrix.hpp"

namespace persw::z2 {

/// A k-cochain with coefficients in Z/2 on a host complex.
///
/// values[i] is the value on the i-th k-simplex of the host in canonical order;
/// the support is the set of simplices where the value is 1.
struct CochainZ2 {
    int degree = 0;
    BitVector values;

    static CochainZ2 zero(const SimplicialComplex& host, int degree);
    /// Throws InvalidArgument when a simplex is missing from the host or has the wrong dimension.
    static CochainZ2 from_support(const SimplicialComplex& host, int degree,
                                  const std::vector<Simplex>& support);

    std::vector<Simplex> support(const SimplicialComplex& host) const;
    bool is_zero() const noexcept { return values.none(); }

    friend bool operator==(const CochainZ2&, const CochainZ2&) = default;
};

/// Matrix of the coboundary C^k -> C^{k+1}: one column per k-simplex,
/// one row per (k+1)-simplex, entry 1 iff the column simplex is a face of the row simplex.
BitMatrix coboundary_matrix(const SimplicialComplex& complex, int k);

/// δc, computed sparsely.
CochainZ2 coboundary(const SimplicialComplex& complex, const CochainZ2& c);

bool is_cocycle(const SimplicialComplex& complex, const CochainZ2& c);

/// Whether a 1-cocycle is δ of some 0-cochain, i.e. its class in H^1 vanishes.
/// Throws InvalidArgument for a cochain that is not a 1-cocycle.
bool is_coboundary(const SimplicialComplex& complex, const CochainZ2& c);

/// A 0-cochain x with δx = c when c is a coboundary.
std::optional<CochainZ2> coboundary_primitive(const SimplicialComplex& complex, const CochainZ2& c);

/// A 1-cocycle whose class generates a nonzero element of H^1(K; Z/2), or nullopt
/// when H^1 = 0. Among the null-space basis vectors of δ^1, the one with the
/// lexicographically smallest support that is not a coboundary is returned.
std::optional<CochainZ2> h1_generator(const SimplicialComplex& complex);

/// dim H^k over Z/2 from ranks of coboundary matrices.
std::size_t betti(const SimplicialComplex& complex, int k);

}  // namespace persw::z2
