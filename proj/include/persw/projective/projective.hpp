#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "persw/grassmann/grassmann.hpp"
#include "persw/simplicial/complex.hpp"
#include "persw/z2/cochain.hpp"

namespace persw::projective {

/// Slack on barycentric coordinates: values >= -face_epsilon count as nonnegative.
inline constexpr double face_epsilon = 1e-9;

/// A proper nonempty subset of {0, ..., m}, as a bitmask.
using Subset = std::uint32_t;

/// A simplex of the barycentric subdivision of the boundary of the m-simplex:
/// a chain of subsets strictly increasing under inclusion.
using SphereFace = std::vector<Subset>;

/// Triangulation L of RP^{m-1}: the barycentric subdivision of the boundary of the
/// m-simplex with every vertex I identified with its complement.
///
/// Vertex v of L is the complementary pair {I, I^c} whose canonical representative
/// labels[v] is the member containing 0; vertices are numbered by increasing label.
/// Embeddings are unit vectors in R^m, written in an orthonormal basis of the
/// hyperplane through the barycenter of the m-simplex (the representative I is used).
struct ProjectiveTriangulation {
    int m = 0;
    SimplicialComplex complex;
    std::vector<Subset> labels;
    std::vector<std::vector<double>> embeddings;
    /// Representative of the generator of H^1(L; Z/2).
    z2::CochainZ2 w1;

    /// L vertex of the pair containing `s`.
    VertexId vertex_of(Subset s) const;
};

/// Builds L for 2 <= m <= 6 together with its w1 cocycle. Throws InvalidArgument otherwise.
ProjectiveTriangulation triangulate_rp(int m);

/// Coordinates in R^{m+1} (summing to zero) of a point x of R^m.
std::vector<double> to_hyperplane(std::span<const double> x);

/// Unit vector of R^m pointing at the barycenter of the face spanned by `s`.
std::vector<double> subset_direction(Subset s, int m);

/// Smallest simplex of the subdivided sphere whose closed realization contains the radial
/// image of the unit vector x (coordinates >= -face_epsilon count as nonnegative).
/// Throws InvalidArgument when x has the wrong size, is not finite, or is not of unit norm
/// within 1e-6.
SphereFace sphere_face_map(std::span<const double> x, int m);

/// Face map of L for a line given by a nonzero direction; v and -v give the same simplex.
/// Throws InvalidArgument for a zero or wrongly sized vector.
Simplex rp_face_map(std::span<const double> v, const ProjectiveTriangulation& t);

/// Face map of L for a rank-1 projector (its top eigenvector is used).
Simplex rp_face_map(const grassmann::GrassmannPoint& p, const ProjectiveTriangulation& t);

}  // namespace persw::projective
