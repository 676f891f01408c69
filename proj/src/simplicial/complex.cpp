#include "persw/simplicial/complex.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "persw/error.hpp"

namespace persw {

Simplex::Simplex(std::initializer_list<VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices)) {}

Simplex::Simplex(std::span<const VertexId> vertices)
    : Simplex(std::vector<VertexId>(vertices.begin(), vertices.end())) {}

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw InvalidArgument("simplex must be nonempty");
    std::ranges::sort(vertices_);
    if (std::ranges::adjacent_find(vertices_) != vertices_.end())
        throw InvalidArgument("simplex has a repeated vertex");
}

bool Simplex::contains(VertexId v) const noexcept {
    return std::ranges::binary_search(vertices_, v);
}

namespace {

bool lex_less(std::span<const VertexId> a, std::span<const VertexId> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Sorts a flat level of stride k and removes duplicates.
void sort_level(std::vector<VertexId>& flat, std::size_t k) {
    const std::size_t n = flat.size() / k;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto row = [&](std::size_t i) { return std::span<const VertexId>(flat.data() + i * k, k); };
    std::ranges::sort(order, [&](std::size_t a, std::size_t b) { return lex_less(row(a), row(b)); });
    std::vector<VertexId> out;
    out.reserve(flat.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto r = row(order[i]);
        if (i > 0 && std::ranges::equal(r, row(order[i - 1]))) continue;
        out.insert(out.end(), r.begin(), r.end());
    }
    flat = std::move(out);
}

}  // namespace

SimplicialComplex SimplicialComplex::from_simplices(std::size_t vertex_count,
                                                    std::span<const Simplex> simplices) {
    int top = 0;
    for (const auto& s : simplices) {
        top = std::max(top, s.dimension());
        if (s.vertices().back() >= vertex_count)
            throw InvalidArgument("simplex vertex id " + std::to_string(s.vertices().back()) +
                                  " outside the vertex set");
    }
    std::vector<std::vector<VertexId>> levels(vertex_count == 0 && simplices.empty() ? 0 : top + 1);
    if (levels.empty()) return {};
    for (VertexId v = 0; v < vertex_count; ++v) levels[0].push_back(v);
    std::vector<VertexId> face;
    for (const auto& s : simplices) {
        const auto k = s.size();
        // every nonempty subset, via bitmask over the (small) vertex list
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            face.clear();
            for (std::size_t i = 0; i < k; ++i)
                if (mask & (1u << i)) face.push_back(s[i]);
            levels[face.size() - 1].insert(levels[face.size() - 1].end(), face.begin(), face.end());
        }
    }
    return from_levels(std::move(levels));
}

SimplicialComplex SimplicialComplex::from_levels(std::vector<std::vector<VertexId>> levels,
                                                 bool verify_closure) {
    while (!levels.empty() && levels.back().empty()) levels.pop_back();
    SimplicialComplex out;
    for (std::size_t d = 0; d < levels.size(); ++d) {
        if (levels[d].size() % (d + 1) != 0) throw InvalidArgument("ragged simplex level");
        for (std::size_t i = 0; i < levels[d].size(); i += d + 1)
            for (std::size_t j = 1; j <= d; ++j)
                if (levels[d][i + j - 1] >= levels[d][i + j])
                    throw InvalidArgument("simplex vertices must be strictly increasing");
        sort_level(levels[d], d + 1);
    }
    if (!levels.empty()) {
        const auto& verts = levels[0];
        for (std::size_t i = 0; i < verts.size(); ++i)
            if (verts[i] != i) throw InvalidArgument("vertex ids must be 0..V-1");
    }
    out.levels_ = std::move(levels);
    if (!verify_closure) return out;

    std::vector<VertexId> facet;
    for (int d = 1; d <= out.dimension(); ++d) {
        for (std::size_t i = 0; i < out.size(d); ++i) {
            auto s = out.simplex(d, i);
            for (std::size_t skip = 0; skip <= static_cast<std::size_t>(d); ++skip) {
                facet.clear();
                for (std::size_t j = 0; j <= static_cast<std::size_t>(d); ++j)
                    if (j != skip) facet.push_back(s[j]);
                if (!out.find(facet)) throw InvalidArgument("complex is not closed under faces");
            }
        }
    }
    return out;
}

std::size_t SimplicialComplex::size(int dim) const noexcept {
    if (dim < 0 || dim > dimension()) return 0;
    return levels_[dim].size() / (dim + 1);
}

std::size_t SimplicialComplex::total_size() const noexcept {
    std::size_t total = 0;
    for (int d = 0; d <= dimension(); ++d) total += size(d);
    return total;
}

std::span<const VertexId> SimplicialComplex::simplex(int dim, std::size_t index) const {
    const auto k = static_cast<std::size_t>(dim) + 1;
    return {levels_.at(dim).data() + index * k, k};
}

std::span<const VertexId> SimplicialComplex::level(int dim) const {
    if (dim < 0 || dim > dimension()) return {};
    return levels_[dim];
}

std::optional<std::size_t> SimplicialComplex::find(std::span<const VertexId> v) const {
    if (v.empty()) return std::nullopt;
    const int dim = static_cast<int>(v.size()) - 1;
    if (dim > dimension()) return std::nullopt;
    if (dim == 0) {
        if (v[0] < vertex_count()) return v[0];
        return std::nullopt;
    }
    std::size_t lo = 0, hi = size(dim);
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (lex_less(simplex(dim, mid), v))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < size(dim) && std::ranges::equal(simplex(dim, lo), v)) return lo;
    return std::nullopt;
}

long long SimplicialComplex::euler_characteristic() const noexcept {
    long long chi = 0;
    for (int d = 0; d <= dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(size(d));
    return chi;
}

SimplicialComplex SimplicialComplex::skeleton(int dim) const {
    SimplicialComplex out;
    const int top = std::min(dim, dimension());
    out.levels_.assign(levels_.begin(), levels_.begin() + (top + 1));
    out.payload_width_ = payload_width_;
    out.payloads_ = payloads_;
    return out;
}

std::span<const double> SimplicialComplex::payload(VertexId v) const {
    if (!has_payloads()) throw InvalidArgument("complex carries no vertex payloads");
    return {payloads_.data() + static_cast<std::size_t>(v) * payload_width_, payload_width_};
}

void SimplicialComplex::set_payloads(std::size_t width, std::vector<double> values) {
    if (width == 0) {
        if (!values.empty()) throw InvalidArgument("payload values without a width");
        payload_width_ = 0;
        payloads_.clear();
        return;
    }
    if (values.size() != width * vertex_count())
        throw InvalidArgument("payload count does not match the vertex count");
    payload_width_ = width;
    payloads_ = std::move(values);
}

FilteredComplex::FilteredComplex(SimplicialComplex complex, std::vector<std::vector<double>> values)
    : complex_(std::move(complex)), values_(std::move(values)) {
    const int top = complex_.dimension();
    values_.resize(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
        if (values_[d].size() != complex_.size(d))
            throw InvalidArgument("filtration values misaligned with simplices in dimension " +
                                  std::to_string(d));
        for (double x : values_[d])
            if (!(x >= 0.0)) throw InvalidArgument("filtration values must be nonnegative");
    }
    std::vector<VertexId> facet;
    for (int d = 1; d <= top; ++d) {
        for (std::size_t i = 0; i < complex_.size(d); ++i) {
            auto s = complex_.simplex(d, i);
            for (int skip = 0; skip <= d; ++skip) {
                facet.clear();
                for (int j = 0; j <= d; ++j)
                    if (j != skip) facet.push_back(s[j]);
                const auto f = complex_.find(facet);
                if (values_[d - 1][*f] > values_[d][i])
                    throw NonMonotoneFiltration("face enters after its coface in dimension " +
                                                std::to_string(d));
            }
        }
    }
}

double FilteredComplex::max_value() const noexcept {
    double m = 0.0;
    for (const auto& level : values_)
        for (double x : level) m = std::max(m, x);
    return m;
}

SimplicialComplex FilteredComplex::sublevel(double t) const {
    const std::size_t nv = complex_.vertex_count();
    std::vector<VertexId> renumber(nv, 0);
    std::vector<VertexId> kept;
    for (VertexId v = 0; v < nv; ++v) {
        if (values_[0][v] <= t) {
            renumber[v] = static_cast<VertexId>(kept.size());
            kept.push_back(v);
        }
    }
    std::vector<std::vector<VertexId>> levels(complex_.dimension() + 1);
    for (int d = 0; d <= complex_.dimension(); ++d) {
        for (std::size_t i = 0; i < complex_.size(d); ++i) {
            if (values_[d][i] > t) continue;
            for (VertexId v : complex_.simplex(d, i)) levels[d].push_back(renumber[v]);
        }
    }
    auto out = SimplicialComplex::from_levels(std::move(levels), false);
    if (complex_.has_payloads()) {
        const auto w = complex_.payload_width();
        std::vector<double> payloads;
        payloads.reserve(kept.size() * w);
        for (VertexId v : kept) {
            auto p = complex_.payload(v);
            payloads.insert(payloads.end(), p.begin(), p.end());
        }
        out.set_payloads(w, std::move(payloads));
    }
    return out;
}

Adjacency adjacency(const SimplicialComplex& complex) {
    const std::size_t nv = complex.vertex_count();
    Adjacency adj;
    adj.offsets.assign(nv + 1, 0);
    const std::size_t ne = complex.size(1);
    for (std::size_t e = 0; e < ne; ++e) {
        auto s = complex.simplex(1, e);
        ++adj.offsets[s[0] + 1];
        ++adj.offsets[s[1] + 1];
    }
    for (std::size_t v = 0; v < nv; ++v) adj.offsets[v + 1] += adj.offsets[v];
    adj.targets.resize(2 * ne);
    std::vector<std::size_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
    for (std::size_t e = 0; e < ne; ++e) {
        auto s = complex.simplex(1, e);
        adj.targets[cursor[s[0]]++] = s[1];
        adj.targets[cursor[s[1]]++] = s[0];
    }
    for (std::size_t v = 0; v < nv; ++v)
        std::sort(adj.targets.begin() + adj.offsets[v], adj.targets.begin() + adj.offsets[v + 1]);
    return adj;
}

}  // namespace persw
