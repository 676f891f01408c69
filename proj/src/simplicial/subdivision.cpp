#include <algorithm>
#include <string>

#include "persw/error.hpp"
#include "persw/simplicial/operations.hpp"

namespace persw {

namespace {

constexpr int max_subdivided_dim = 10;

// Emits every chain of nonempty faces (as submasks of `full`) whose top element is `full`.
// Chains are written bottom-up as new-vertex ids, which is ascending order because new
// ids are dimension-major and dimensions strictly increase along a chain.
void emit_chains(std::uint32_t full, const std::vector<VertexId>& face_id, std::vector<VertexId>& chain,
                 std::vector<std::vector<VertexId>>& levels) {
    // `chain` holds the elements above `full`, top first
    chain.push_back(face_id[full]);
    const std::size_t dim = chain.size() - 1;
    for (std::size_t i = chain.size(); i-- > 0;) levels[dim].push_back(chain[i]);
    for (std::uint32_t sub = (full - 1) & full; sub != 0; sub = (sub - 1) & full)
        emit_chains(sub, face_id, chain, levels);
    chain.pop_back();
}

}  // namespace

SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex) {
    const int top = complex.dimension();
    if (top < 0) return {};
    if (top > max_subdivided_dim)
        throw InvalidArgument("barycentric subdivision supports dimension <= " +
                              std::to_string(max_subdivided_dim));

    // new vertex ids: offset of each dimension in the canonical order
    std::vector<std::size_t> offset(top + 2, 0);
    for (int d = 0; d <= top; ++d) offset[d + 1] = offset[d] + complex.size(d);

    std::vector<std::vector<VertexId>> levels(top + 1);
    std::vector<VertexId> face_id;
    std::vector<VertexId> chain;
    std::vector<VertexId> face;
    for (int d = 0; d <= top; ++d) {
        const std::uint32_t masks = 1u << (d + 1);
        face_id.assign(masks, 0);
        for (std::size_t i = 0; i < complex.size(d); ++i) {
            auto s = complex.simplex(d, i);
            for (std::uint32_t mask = 1; mask < masks; ++mask) {
                face.clear();
                for (int j = 0; j <= d; ++j)
                    if (mask & (1u << j)) face.push_back(s[j]);
                const int fd = static_cast<int>(face.size()) - 1;
                face_id[mask] = static_cast<VertexId>(offset[fd] + *complex.find(face));
            }
            // chains whose top element is this simplex
            chain.clear();
            emit_chains(masks - 1, face_id, chain, levels);
        }
    }
    auto out = SimplicialComplex::from_levels(std::move(levels), false);

    if (complex.has_payloads()) {
        const auto w = complex.payload_width();
        std::vector<double> payloads(out.vertex_count() * w, 0.0);
        for (int d = 0; d <= top; ++d) {
            for (std::size_t i = 0; i < complex.size(d); ++i) {
                double* dst = payloads.data() + (offset[d] + i) * w;
                for (VertexId v : complex.simplex(d, i)) {
                    auto p = complex.payload(v);
                    for (std::size_t c = 0; c < w; ++c) dst[c] += p[c];
                }
                for (std::size_t c = 0; c < w; ++c) dst[c] /= static_cast<double>(d + 1);
            }
        }
        out.set_payloads(w, std::move(payloads));
    }
    return out;
}

std::vector<Simplex> closed_star(const SimplicialComplex& complex, VertexId v) {
    if (v >= complex.vertex_count())
        throw InvalidArgument("vertex " + std::to_string(v) + " is not in the complex");
    std::vector<Simplex> out;
    std::vector<VertexId> with_v;
    for (int d = 0; d <= complex.dimension(); ++d) {
        for (std::size_t i = 0; i < complex.size(d); ++i) {
            auto s = complex.simplex(d, i);
            // s lies in the closed star iff s ∪ {v} is a simplex
            with_v.assign(s.begin(), s.end());
            if (!std::ranges::binary_search(with_v, v)) {
                with_v.insert(std::ranges::upper_bound(with_v, v), v);
                if (!complex.find(with_v)) continue;
            }
            out.emplace_back(s);
        }
    }
    return out;
}

bool is_simplicial_map(const VertexMap& f, const SimplicialComplex& source,
                       const SimplicialComplex& target) {
    if (f.size() != source.vertex_count())
        throw InvalidArgument("vertex map is not total on the source complex");
    for (VertexId image : f.images)
        if (image >= target.vertex_count()) return false;
    std::vector<VertexId> image;
    for (int d = 1; d <= source.dimension(); ++d) {
        for (std::size_t i = 0; i < source.size(d); ++i) {
            image.clear();
            for (VertexId v : source.simplex(d, i)) image.push_back(f.images[v]);
            std::ranges::sort(image);
            image.erase(std::unique(image.begin(), image.end()), image.end());
            if (!target.find(image)) return false;
        }
    }
    return true;
}

z2::CochainZ2 pullback_cochain(const VertexMap& f, const SimplicialComplex& source,
                               const SimplicialComplex& target, const z2::CochainZ2& w) {
    if (w.degree != 1 || w.values.size() != target.size(1))
        throw InvalidArgument("pullback expects a 1-cochain on the target complex");
    if (!is_simplicial_map(f, source, target))
        throw InvalidArgument("pullback along a map that is not simplicial");
    auto out = z2::CochainZ2::zero(source, 1);
    for (std::size_t e = 0; e < source.size(1); ++e) {
        auto s = source.simplex(1, e);
        VertexId a = f.images[s[0]], b = f.images[s[1]];
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        const VertexId edge[2] = {a, b};
        if (w.values.get(*target.find(edge))) out.values.set(e);
    }
    return out;
}

}  // namespace persw
