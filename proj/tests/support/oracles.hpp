#pragma once

// Brute-force reference computations used by the tests. Nothing here calls into the
// GF(2) elimination, the barcode reduction, or the spanning-forest coboundary test
// of the library; the only shared code is the complex container.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <tuple>
#include <vector>

#include "persw/simplicial/complex.hpp"

namespace oracle {

using Rows = std::vector<std::vector<int>>;

/// Rank mod 2 by enumerating every combination of rows (rows.size() <= 16).
inline int span_rank(const Rows& rows) {
    std::set<std::vector<int>> span;
    const std::size_t n = rows.size();
    const std::size_t cols = n ? rows[0].size() : 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> v(cols, 0);
        for (std::size_t r = 0; r < n; ++r)
            if (mask & (1u << r))
                for (std::size_t c = 0; c < cols; ++c) v[c] ^= rows[r][c];
        span.insert(v);
    }
    int r = 0;
    while ((std::size_t{1} << r) < span.size()) ++r;
    return r;
}

/// Rank mod 2 by plain Gaussian elimination on int rows.
inline int dense_rank(Rows rows) {
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols; ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && rows[r][c])
                for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<persw::VertexId>> simplices_of(const persw::SimplicialComplex& k, int d) {
    std::vector<std::vector<persw::VertexId>> out;
    for (std::size_t i = 0; i < k.size(d); ++i) {
        auto s = k.simplex(d, i);
        out.emplace_back(s.begin(), s.end());
    }
    return out;
}

/// Boundary matrix ∂_d restricted to simplices accepted by `keep` (rows: (d-1)-simplices,
/// columns: d-simplices), built by subset tests.
template <typename Keep>
Rows boundary_rows(const persw::SimplicialComplex& k, int d, Keep keep) {
    auto lower = simplices_of(k, d - 1);
    auto upper = simplices_of(k, d);
    std::vector<std::size_t> lo_idx, up_idx;
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (keep(d - 1, i)) lo_idx.push_back(i);
    for (std::size_t i = 0; i < upper.size(); ++i)
        if (keep(d, i)) up_idx.push_back(i);
    Rows rows(lo_idx.size(), std::vector<int>(up_idx.size(), 0));
    for (std::size_t r = 0; r < lo_idx.size(); ++r)
        for (std::size_t c = 0; c < up_idx.size(); ++c)
            rows[r][c] = std::includes(upper[up_idx[c]].begin(), upper[up_idx[c]].end(),
                                       lower[lo_idx[r]].begin(), lower[lo_idx[r]].end());
    return rows;
}

/// Z/2 Betti numbers of the subcomplex selected by `keep`.
template <typename Keep>
int betti(const persw::SimplicialComplex& k, int d, Keep keep) {
    int n = 0;
    for (std::size_t i = 0; i < k.size(d); ++i) n += keep(d, i);
    const int rank_d = d == 0 ? 0 : dense_rank(boundary_rows(k, d, keep));
    const int rank_up = d + 1 > k.dimension() ? 0 : dense_rank(boundary_rows(k, d + 1, keep));
    return n - rank_d - rank_up;
}

inline int betti(const persw::SimplicialComplex& k, int d) {
    return betti(k, d, [](int, std::size_t) { return true; });
}

/// Whether the 1-cochain with the given edge values is δ of some 0-cochain:
/// tries all 2^V vertex assignments (V <= 20).
inline bool brute_is_coboundary(const persw::SimplicialComplex& k, const std::vector<int>& edge_values) {
    const auto edges = simplices_of(k, 1);
    const std::size_t nv = k.vertex_count();
    for (std::uint32_t x = 0; x < (1u << nv); ++x) {
        bool ok = true;
        for (std::size_t e = 0; e < edges.size() && ok; ++e) {
            const int val = ((x >> edges[e][0]) ^ (x >> edges[e][1])) & 1;
            ok = val == edge_values[e];
        }
        if (ok) return true;
    }
    return false;
}

inline bool brute_is_cocycle(const persw::SimplicialComplex& k, const std::vector<int>& edge_values) {
    const auto edges = simplices_of(k, 1);
    for (const auto& t : simplices_of(k, 2)) {
        int sum = 0;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (std::includes(t.begin(), t.end(), edges[e].begin(), edges[e].end())) sum ^= edge_values[e];
        if (sum) return false;
    }
    return true;
}

/// dim H^1 by enumerating all 2^E one-cochains (E <= 16).
inline int brute_h1_dim(const persw::SimplicialComplex& k) {
    const std::size_t ne = k.size(1);
    std::size_t cocycles = 0;
    std::set<std::uint32_t> coboundaries;
    const auto edges = simplices_of(k, 1);
    for (std::uint32_t m = 0; m < (1u << ne); ++m) {
        std::vector<int> v(ne);
        for (std::size_t e = 0; e < ne; ++e) v[e] = (m >> e) & 1;
        if (brute_is_cocycle(k, v)) ++cocycles;
    }
    for (std::uint32_t x = 0; x < (1u << k.vertex_count()); ++x) {
        std::uint32_t img = 0;
        for (std::size_t e = 0; e < ne; ++e)
            if (((x >> edges[e][0]) ^ (x >> edges[e][1])) & 1) img |= 1u << e;
        coboundaries.insert(img);
    }
    int dim = 0;
    while ((std::size_t{1} << dim) < cocycles / coboundaries.size()) ++dim;
    return dim;
}

struct Bar {
    int dim;
    double birth;
    double death;
    auto operator<=>(const Bar&) const = default;
};

/// Barcode from the rank invariant: for critical values c_0 < ... < c_r,
/// β^{i,j} = dim Z_k(K_i) - dim(Z_k(K_i) ∩ B_k(K_j)), and the multiplicity of
/// [c_i, c_j) follows by inclusion-exclusion. Independent of any column reduction.
inline std::vector<Bar> rank_invariant_barcode(const persw::FilteredComplex& f, int max_dim) {
    const auto& k = f.complex();
    std::vector<double> crit;
    for (int d = 0; d <= k.dimension(); ++d)
        for (double v : f.values(d)) crit.push_back(v);
    std::ranges::sort(crit);
    crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
    const int r = static_cast<int>(crit.size());
    const double inf = std::numeric_limits<double>::infinity();

    auto keep_at = [&](int i) {
        return [&f, &crit, i](int d, std::size_t s) { return f.value(d, s) <= crit[i]; };
    };
    // β^{i,j} with j == r meaning "at infinity" (= β^{i, r-1} for a finite complex)
    auto persistent_betti = [&](int dim, int i, int j) -> int {
        // Z_dim(K_i): null space of ∂_dim restricted to K_i; B_dim(K_j): column space of ∂_{dim+1} on K_j
        auto ki = keep_at(i);
        auto kj = keep_at(j);
        const auto cells = simplices_of(k, dim);
        // cycles of K_i as vectors in C_dim(K_final)
        Rows cycles;
        {
            std::vector<std::size_t> idx;
            for (std::size_t s = 0; s < cells.size(); ++s)
                if (ki(dim, s)) idx.push_back(s);
            Rows bd = dim == 0 ? Rows{} : boundary_rows(k, dim, ki);
            // enumerate null space basis by elimination on the transposed system
            const std::size_t n = idx.size();
            Rows a = bd;  // rows: (dim-1)-cells, cols: dim-cells in K_i
            // reduce a, find free columns
            std::vector<int> pivot_col;
            std::size_t row = 0;
            for (std::size_t c = 0; c < n && row < a.size(); ++c) {
                std::size_t p = row;
                while (p < a.size() && !a[p][c]) ++p;
                if (p == a.size()) continue;
                std::swap(a[p], a[row]);
                for (std::size_t q = 0; q < a.size(); ++q)
                    if (q != row && a[q][c])
                        for (std::size_t t = 0; t < n; ++t) a[q][t] ^= a[row][t];
                pivot_col.push_back(static_cast<int>(c));
                ++row;
            }
            std::vector<bool> is_pivot(n, false);
            for (int c : pivot_col) is_pivot[c] = true;
            for (std::size_t fcol = 0; fcol < n; ++fcol) {
                if (is_pivot[fcol]) continue;
                std::vector<int> v(cells.size(), 0);
                v[idx[fcol]] = 1;
                for (std::size_t q = 0; q < pivot_col.size(); ++q)
                    if (a[q][fcol]) v[idx[pivot_col[q]]] = 1;
                cycles.push_back(v);
            }
        }
        Rows boundaries;
        if (dim + 1 <= k.dimension()) {
            const auto tops = simplices_of(k, dim + 1);
            for (std::size_t t = 0; t < tops.size(); ++t) {
                if (!kj(dim + 1, t)) continue;
                std::vector<int> v(cells.size(), 0);
                for (std::size_t s = 0; s < cells.size(); ++s)
                    v[s] = std::includes(tops[t].begin(), tops[t].end(), cells[s].begin(), cells[s].end());
                boundaries.push_back(v);
            }
        }
        const int z = static_cast<int>(cycles.size());
        const int b = dense_rank(boundaries);
        Rows both = boundaries;
        both.insert(both.end(), cycles.begin(), cycles.end());
        const int sum = dense_rank(both);
        const int inter = z + b - sum;
        return z - inter;
    };

    std::vector<Bar> bars;
    for (int dim = 0; dim <= max_dim; ++dim) {
        auto beta = [&](int i, int j) {
            if (i < 0) return 0;
            return persistent_betti(dim, i, std::min(j, r - 1));
        };
        for (int i = 0; i < r; ++i) {
            for (int j = i + 1; j <= r; ++j) {
                // bars born at c_i, dying at c_j (j == r: never)
                int mult;
                if (j == r) {
                    mult = beta(i, r - 1) - beta(i - 1, r - 1);
                } else {
                    mult = beta(i, j - 1) - beta(i - 1, j - 1) - beta(i, j) + beta(i - 1, j);
                }
                for (int m = 0; m < mult; ++m) bars.push_back({dim, crit[i], j == r ? inf : crit[j]});
            }
        }
    }
    std::ranges::sort(bars);
    return bars;
}

}  // namespace oracle
