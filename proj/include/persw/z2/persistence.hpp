#pragma once

#include <limits>
#include <vector>

#include "persw/simplicial/complex.hpp"

namespace persw::z2 {

inline constexpr double infinity = std::numeric_limits<double>::infinity();

struct Interval {
    int dim = 0;
    double birth = 0.0;
    double death = infinity;

    bool is_infinite() const noexcept { return death == infinity; }
    double length() const noexcept { return death - birth; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct Barcode {
    std::vector<Interval> intervals;

    std::vector<Interval> in_dimension(int dim) const;
    std::size_t count(int dim) const;
    std::size_t infinite_count(int dim) const;
    /// Longest bar of the given dimension; infinite bars win. Default interval when none.
    Interval longest(int dim) const;
};

/// Persistence barcode of Z/2 homology in dimensions 0..max_dim by column reduction
/// of the boundary matrix with clearing. Simplices are ordered by (value, dimension,
/// lexicographic vertices). Intervals of zero length are omitted. Intervals are
/// sorted by (dim, birth, death).
Barcode barcode(const FilteredComplex& filtration, int max_dim);

}  // namespace persw::z2
