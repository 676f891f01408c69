#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace persw {

using VertexId = std::uint32_t;

/// A nonempty, strictly increasing list of vertex ids. dim = size - 1.
class Simplex {
public:
    Simplex() = default;
    Simplex(std::initializer_list<VertexId> vertices);
    /// Sorts the input; throws InvalidArgument on empty input or repeated vertices.
    explicit Simplex(std::vector<VertexId> vertices);
    explicit Simplex(std::span<const VertexId> vertices);

    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const noexcept { return vertices_.size(); }
    std::span<const VertexId> vertices() const noexcept { return vertices_; }
    VertexId operator[](std::size_t i) const { return vertices_[i]; }
    bool contains(VertexId v) const noexcept;

    auto begin() const noexcept { return vertices_.begin(); }
    auto end() const noexcept { return vertices_.end(); }

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend auto operator<=>(const Simplex&, const Simplex&) = default;

private:
    std::vector<VertexId> vertices_;
};

/// A finite abstract simplicial complex on the vertex set {0, ..., V-1}.
///
/// Simplices of each dimension are stored flat (stride dim+1) and sorted
/// lexicographically, so the position of a simplex in its level is its
/// canonical index. Every vertex may carry a payload of fixed width
/// (coordinates in some ambient space); payloads are present for all
/// vertices or for none.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Closure of `simplices` together with the isolated vertices 0..vertex_count-1.
    /// Every vertex id used by a simplex must be < vertex_count.
    static SimplicialComplex from_simplices(std::size_t vertex_count,
                                            std::span<const Simplex> simplices);

    /// `levels[d]` is a flat list of d-simplices with increasing vertices. Levels are
    /// sorted and deduplicated here. With `verify_closure`, InvalidArgument is thrown
    /// when a face is missing; producers that build closed complexes by
    /// construction may skip the check.
    static SimplicialComplex from_levels(std::vector<std::vector<VertexId>> levels,
                                         bool verify_closure = true);

    /// -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(levels_.size()) - 1; }
    std::size_t vertex_count() const noexcept { return levels_.empty() ? 0 : levels_[0].size(); }
    std::size_t size(int dim) const noexcept;
    std::size_t total_size() const noexcept;

    std::span<const VertexId> simplex(int dim, std::size_t index) const;
    Simplex simplex_at(int dim, std::size_t index) const { return Simplex(simplex(dim, index)); }
    /// Raw flat storage of one level (stride dim+1).
    std::span<const VertexId> level(int dim) const;

    /// Canonical index of a sorted vertex list, if present.
    std::optional<std::size_t> find(std::span<const VertexId> sorted_vertices) const;
    std::optional<std::size_t> find(const Simplex& s) const { return find(s.vertices()); }
    bool contains(const Simplex& s) const { return find(s).has_value(); }

    /// Euler characteristic.
    long long euler_characteristic() const noexcept;

    /// Simplices of dimension <= dim, payloads kept.
    SimplicialComplex skeleton(int dim) const;

    bool has_payloads() const noexcept { return payload_width_ > 0; }
    std::size_t payload_width() const noexcept { return payload_width_; }
    std::span<const double> payload(VertexId v) const;
    /// Attaches `width` doubles per vertex; `values.size()` must equal width * vertex_count().
    void set_payloads(std::size_t width, std::vector<double> values);
    std::span<const double> payloads() const noexcept { return payloads_; }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.levels_ == b.levels_;
    }

private:
    std::vector<std::vector<VertexId>> levels_;
    std::size_t payload_width_ = 0;
    std::vector<double> payloads_;
};

/// A simplicial complex with one nonnegative value per simplex, monotone along faces.
class FilteredComplex {
public:
    FilteredComplex() = default;
    /// `values[d][i]` is the value of the i-th d-simplex. Throws NonMonotoneFiltration
    /// when a face value exceeds a coface value, InvalidArgument for negative or
    /// misaligned values.
    FilteredComplex(SimplicialComplex complex, std::vector<std::vector<double>> values);

    const SimplicialComplex& complex() const noexcept { return complex_; }
    double value(int dim, std::size_t index) const { return values_.at(dim).at(index); }
    std::span<const double> values(int dim) const { return values_.at(dim); }
    double max_value() const noexcept;

    /// Subcomplex of simplices with value <= t. Vertices that are not present are
    /// dropped and the remaining ones renumbered in order; payloads follow.
    SimplicialComplex sublevel(double t) const;

private:
    SimplicialComplex complex_;
    std::vector<std::vector<double>> values_;
};

/// A map between vertex sets; images[v] is the image of vertex v of the source.
struct VertexMap {
    std::vector<VertexId> images;

    VertexId operator()(VertexId v) const { return images.at(v); }
    std::size_t size() const noexcept { return images.size(); }
    friend bool operator==(const VertexMap&, const VertexMap&) = default;
};

/// Vertex adjacency of the 1-skeleton in compressed row form.
struct Adjacency {
    std::vector<std::size_t> offsets;
    std::vector<VertexId> targets;

    std::span<const VertexId> neighbors(VertexId v) const {
        return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
    }
};

Adjacency adjacency(const SimplicialComplex& complex);

}  // namespace persw
