#include "persw/z2/cochain.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "persw/error.hpp"

namespace persw::z2 {

namespace {

void check_host(const SimplicialComplex& host, const CochainZ2& c) {
    if (c.degree < 0 || c.values.size() != host.size(c.degree))
        throw InvalidArgument("cochain of degree " + std::to_string(c.degree) +
                              " is not hosted on this complex");
}

// Canonical indices of the facets of the i-th simplex of dimension d.
template <typename F>
void for_each_facet(const SimplicialComplex& k, int d, std::size_t i, F&& f) {
    auto s = k.simplex(d, i);
    VertexId buf[16];
    for (int skip = 0; skip <= d; ++skip) {
        int n = 0;
        for (int j = 0; j <= d; ++j)
            if (j != skip) buf[n++] = s[j];
        f(*k.find(std::span<const VertexId>(buf, static_cast<std::size_t>(d))));
    }
}

}  // namespace

CochainZ2 CochainZ2::zero(const SimplicialComplex& host, int degree) {
    if (degree < 0) throw InvalidArgument("negative cochain degree");
    return {degree, BitVector(host.size(degree))};
}

CochainZ2 CochainZ2::from_support(const SimplicialComplex& host, int degree,
                                  const std::vector<Simplex>& support) {
    auto c = zero(host, degree);
    for (const auto& s : support) {
        if (s.dimension() != degree)
            throw InvalidArgument("support simplex has dimension " + std::to_string(s.dimension()) +
                                  ", expected " + std::to_string(degree));
        const auto idx = host.find(s);
        if (!idx) throw InvalidArgument("support simplex is not in the host complex");
        c.values.set(*idx);
    }
    return c;
}

std::vector<Simplex> CochainZ2::support(const SimplicialComplex& host) const {
    std::vector<Simplex> out;
    for (auto i : values.support()) out.push_back(host.simplex_at(degree, i));
    return out;
}

BitMatrix coboundary_matrix(const SimplicialComplex& complex, int k) {
    BitMatrix m(complex.size(k + 1), complex.size(k));
    if (k < 0) return m;
    for (std::size_t r = 0; r < complex.size(k + 1); ++r)
        for_each_facet(complex, k + 1, r, [&](std::size_t c) { m.set(r, c); });
    return m;
}

CochainZ2 coboundary(const SimplicialComplex& complex, const CochainZ2& c) {
    check_host(complex, c);
    auto out = CochainZ2::zero(complex, c.degree + 1);
    for (std::size_t r = 0; r < complex.size(c.degree + 1); ++r) {
        bool acc = false;
        for_each_facet(complex, c.degree + 1, r, [&](std::size_t f) { acc ^= c.values.get(f); });
        if (acc) out.values.set(r);
    }
    return out;
}

bool is_cocycle(const SimplicialComplex& complex, const CochainZ2& c) {
    return coboundary(complex, c).is_zero();
}

std::optional<CochainZ2> coboundary_primitive(const SimplicialComplex& complex, const CochainZ2& c) {
    check_host(complex, c);
    if (c.degree != 1) throw InvalidArgument("coboundary test expects a 1-cochain");
    if (!is_cocycle(complex, c)) throw InvalidArgument("cochain is not a cocycle");

    const std::size_t nv = complex.vertex_count();
    const std::size_t ne = complex.size(1);
    // adjacency carrying edge indices
    std::vector<std::size_t> offsets(nv + 1, 0);
    for (std::size_t e = 0; e < ne; ++e) {
        auto s = complex.simplex(1, e);
        ++offsets[s[0] + 1];
        ++offsets[s[1] + 1];
    }
    for (std::size_t v = 0; v < nv; ++v) offsets[v + 1] += offsets[v];
    std::vector<std::pair<VertexId, std::size_t>> incident(2 * ne);
    std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
    for (std::size_t e = 0; e < ne; ++e) {
        auto s = complex.simplex(1, e);
        incident[cursor[s[0]]++] = {s[1], e};
        incident[cursor[s[1]]++] = {s[0], e};
    }

    // Propagate potentials along a spanning forest, then check every edge.
    auto x = CochainZ2::zero(complex, 0);
    std::vector<bool> seen(nv, false);
    std::queue<VertexId> queue;
    for (VertexId root = 0; root < nv; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        queue.push(root);
        while (!queue.empty()) {
            const VertexId u = queue.front();
            queue.pop();
            for (std::size_t k = offsets[u]; k < offsets[u + 1]; ++k) {
                const auto [w, e] = incident[k];
                if (seen[w]) continue;
                seen[w] = true;
                x.values.set(w, x.values.get(u) ^ c.values.get(e));
                queue.push(w);
            }
        }
    }
    for (std::size_t e = 0; e < ne; ++e) {
        auto s = complex.simplex(1, e);
        if ((x.values.get(s[0]) ^ x.values.get(s[1])) != c.values.get(e)) return std::nullopt;
    }
    return x;
}

bool is_coboundary(const SimplicialComplex& complex, const CochainZ2& c) {
    return coboundary_primitive(complex, c).has_value();
}

std::optional<CochainZ2> h1_generator(const SimplicialComplex& complex) {
    auto basis = gf2_kernel_basis(coboundary_matrix(complex, 1));
    std::vector<std::vector<std::size_t>> supports;
    supports.reserve(basis.size());
    for (const auto& b : basis) supports.push_back(b.support());
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::ranges::sort(order, [&](std::size_t a, std::size_t b) { return supports[a] < supports[b]; });
    for (auto i : order) {
        CochainZ2 c{1, basis[i]};
        if (!is_coboundary(complex, c)) return c;
    }
    return std::nullopt;
}

std::size_t betti(const SimplicialComplex& complex, int k) {
    if (k < 0 || k > complex.dimension()) return 0;
    const std::size_t n = complex.size(k);
    const std::size_t rank_out = gf2_rank(coboundary_matrix(complex, k));
    const std::size_t rank_in = k == 0 ? 0 : gf2_rank(coboundary_matrix(complex, k - 1));
    return n - rank_out - rank_in;
}

}  // namespace persw::z2
