#pragma once

#include <utility>
#include <vector>

#include "persw/simplicial/complex.hpp"
#include "persw/z2/cochain.hpp"

namespace persw {

/// Dense symmetric matrix of pairwise distances.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
    DistanceMatrix(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    /// Sets both (i, j) and (j, i).
    void set(std::size_t i, std::size_t j, double d) {
        data_[i * n_ + j] = d;
        data_[j * n_ + i] = d;
    }
    friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<double> data_;
};

/// A simple undirected graph on {0, ..., vertex_count-1}.
struct Graph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;
};

/// Flag complex of `graph`, truncated at `max_dim`.
SimplicialComplex clique_complex(const Graph& graph, int max_dim);

/// Vietoris-Rips filtration with the half-distance convention: vertices enter at 0,
/// an edge {i, j} at D(i, j) / 2, higher simplices at the max of their edges.
/// Simplices with value > max_value are omitted.
/// Throws InvalidArgument for a non-symmetric, negative, or nonzero-diagonal matrix.
FilteredComplex rips_filtration(const DistanceMatrix& distances, double max_value, int max_dim);

/// First barycentric subdivision.
///
/// Vertex i of the result is the i-th simplex of `complex` in canonical order
/// (dimension-major, then lexicographic), so ids are reproducible. Simplices are
/// the chains s0 < s1 < ... of faces. Payloads, when present, become the mean of
/// the payloads of the underlying simplex's vertices.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex);

/// All faces of all simplices containing `v`, sorted by (dimension, vertices).
/// Throws InvalidArgument for an unknown vertex.
std::vector<Simplex> closed_star(const SimplicialComplex& complex, VertexId v);

/// Whether the image of every simplex of `source` (duplicates removed) is a simplex of `target`.
bool is_simplicial_map(const VertexMap& f, const SimplicialComplex& source,
                       const SimplicialComplex& target);

/// Pullback of a 1-cochain along a simplicial map: the value on [a, b] is
/// w([f(a), f(b)]) when f(a) != f(b) and 0 otherwise.
/// Throws InvalidArgument when f is not simplicial or w is not a 1-cochain on `target`.
z2::CochainZ2 pullback_cochain(const VertexMap& f, const SimplicialComplex& source,
                               const SimplicialComplex& target, const z2::CochainZ2& w);

}  // namespace persw
