#include <algorithm>
#include <cmath>
#include <string>

#include "persw/error.hpp"
#include "persw/simplicial/operations.hpp"

namespace persw {

DistanceMatrix::DistanceMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : DistanceMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& r : rows) {
        if (r.size() != n_) throw InvalidArgument("distance matrix literal is not square");
        std::size_t j = 0;
        for (double x : r) data_[i * n_ + j++] = x;
        ++i;
    }
}

namespace {

// Higher-numbered neighbors of every vertex, sorted.
std::vector<std::vector<VertexId>> forward_neighbors(const Graph& g) {
    std::vector<std::vector<VertexId>> up(g.vertex_count);
    for (auto [a, b] : g.edges) {
        if (a == b) throw InvalidArgument("graph has a self-loop");
        if (a >= g.vertex_count || b >= g.vertex_count)
            throw InvalidArgument("graph edge endpoint outside the vertex set");
        up[std::min(a, b)].push_back(std::max(a, b));
    }
    for (auto& n : up) {
        std::ranges::sort(n);
        n.erase(std::unique(n.begin(), n.end()), n.end());
    }
    return up;
}

void extend_cliques(const std::vector<std::vector<VertexId>>& up, std::vector<VertexId>& clique,
                    const std::vector<VertexId>& candidates, int max_dim,
                    std::vector<std::vector<VertexId>>& levels) {
    const int dim = static_cast<int>(clique.size()) - 1;
    levels[dim].insert(levels[dim].end(), clique.begin(), clique.end());
    if (dim >= max_dim) return;
    std::vector<VertexId> next;
    for (VertexId c : candidates) {
        next.clear();
        std::ranges::set_intersection(candidates, up[c], std::back_inserter(next));
        clique.push_back(c);
        extend_cliques(up, clique, next, max_dim, levels);
        clique.pop_back();
    }
}

}  // namespace

SimplicialComplex clique_complex(const Graph& graph, int max_dim) {
    if (max_dim < 0) throw InvalidArgument("max_dim must be nonnegative");
    if (graph.vertex_count == 0) return {};
    const auto up = forward_neighbors(graph);
    std::vector<std::vector<VertexId>> levels(max_dim + 1);
    std::vector<VertexId> clique;
    for (VertexId v = 0; v < graph.vertex_count; ++v) {
        clique.assign(1, v);
        extend_cliques(up, clique, up[v], max_dim, levels);
    }
    return SimplicialComplex::from_levels(std::move(levels), false);
}

FilteredComplex rips_filtration(const DistanceMatrix& d, double max_value, int max_dim) {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (d(i, i) != 0.0) throw InvalidArgument("distance matrix has a nonzero diagonal");
        for (std::size_t j = 0; j < n; ++j) {
            if (!(d(i, j) >= 0.0)) throw InvalidArgument("distance matrix has a negative entry");
            const double scale = std::max({1.0, d(i, j), d(j, i)});
            if (std::abs(d(i, j) - d(j, i)) > 1e-12 * scale)
                throw InvalidArgument("distance matrix is not symmetric at (" + std::to_string(i) +
                                      ", " + std::to_string(j) + ")");
        }
    }
    Graph g{n, {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (d(i, j) / 2.0 <= max_value)
                g.edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
    auto complex = clique_complex(g, max_dim);

    std::vector<std::vector<double>> values(complex.dimension() + 1);
    for (int dim = 0; dim <= complex.dimension(); ++dim) {
        values[dim].resize(complex.size(dim), 0.0);
        for (std::size_t s = 0; s < complex.size(dim); ++s) {
            auto v = complex.simplex(dim, s);
            double m = 0.0;
            for (std::size_t a = 0; a < v.size(); ++a)
                for (std::size_t b = a + 1; b < v.size(); ++b) m = std::max(m, d(v[a], v[b]) / 2.0);
            values[dim][s] = m;
        }
    }
    return FilteredComplex(std::move(complex), std::move(values));
}

}  // namespace persw
