#include "persw/projective/projective.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "persw/error.hpp"
#include "persw/simplicial/operations.hpp"

namespace persw::projective {

namespace {

Subset full_set(int m) { return (Subset{1} << (m + 1)) - 1; }

Subset canonical(Subset s, int m) { return (s & 1u) ? s : (full_set(m) & ~s); }

// Orthonormal basis b_1..b_m of the sum-zero hyperplane of R^{m+1}:
// b_k = (1, ..., 1, -k, 0, ..., 0) / sqrt(k (k + 1)) with k leading ones.
double basis_entry(int k, int i) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    if (i < k) return scale;
    if (i == k) return -k * scale;
    return 0.0;
}

}  // namespace

std::vector<double> to_hyperplane(std::span<const double> x) {
    const int m = static_cast<int>(x.size());
    std::vector<double> y(m + 1, 0.0);
    for (int k = 1; k <= m; ++k)
        for (int i = 0; i <= k; ++i) y[i] += x[k - 1] * basis_entry(k, i);
    return y;
}

std::vector<double> subset_direction(Subset s, int m) {
    std::vector<double> x(m, 0.0);
    for (int k = 1; k <= m; ++k)
        for (int i = 0; i <= k; ++i)
            if (s & (1u << i)) x[k - 1] += basis_entry(k, i);
    double n = 0.0;
    for (double c : x) n += c * c;
    n = std::sqrt(n);
    for (double& c : x) c /= n;
    return x;
}

VertexId ProjectiveTriangulation::vertex_of(Subset s) const {
    const Subset c = canonical(s, m);
    auto it = std::ranges::lower_bound(labels, c);
    if (it == labels.end() || *it != c) throw InvalidArgument("subset is not a vertex label");
    return static_cast<VertexId>(it - labels.begin());
}

ProjectiveTriangulation triangulate_rp(int m) {
    if (m < 2 || m > 6) throw InvalidArgument("triangulate_rp supports 2 <= m <= 6, got " + std::to_string(m));
    ProjectiveTriangulation t;
    t.m = m;

    // boundary of the m-simplex: all proper nonempty subsets of {0..m}
    std::vector<Simplex> facets;
    for (int skip = 0; skip <= m; ++skip) {
        std::vector<VertexId> f;
        for (int i = 0; i <= m; ++i)
            if (i != skip) f.push_back(static_cast<VertexId>(i));
        facets.emplace_back(std::move(f));
    }
    const auto boundary = SimplicialComplex::from_simplices(m + 1, facets);
    const auto sphere = barycentric_subdivision(boundary);

    // vertex i of `sphere` is the i-th simplex of `boundary` in canonical order
    std::vector<Subset> sphere_label;
    for (int d = 0; d <= boundary.dimension(); ++d)
        for (std::size_t i = 0; i < boundary.size(d); ++i) {
            Subset s = 0;
            for (VertexId v : boundary.simplex(d, i)) s |= 1u << v;
            sphere_label.push_back(s);
        }

    for (Subset s = 1; s < full_set(m); ++s)
        if (s & 1u) t.labels.push_back(s);

    // quotient: map every simplex of the sphere through the complement identification
    std::vector<std::vector<VertexId>> levels(sphere.dimension() + 1);
    std::vector<VertexId> image;
    for (int d = 0; d <= sphere.dimension(); ++d) {
        for (std::size_t i = 0; i < sphere.size(d); ++i) {
            image.clear();
            for (VertexId v : sphere.simplex(d, i)) image.push_back(t.vertex_of(sphere_label[v]));
            std::ranges::sort(image);
            if (std::ranges::adjacent_find(image) != image.end())
                throw Error("complement identification collapsed a simplex");
            levels[d].insert(levels[d].end(), image.begin(), image.end());
        }
    }
    t.complex = SimplicialComplex::from_levels(std::move(levels));

    for (Subset s : t.labels) t.embeddings.push_back(subset_direction(s, m));

    auto w1 = z2::h1_generator(t.complex);
    if (!w1) throw Error("triangulated projective space has trivial H^1");
    t.w1 = std::move(*w1);
    return t;
}

SphereFace sphere_face_map(std::span<const double> x, int m) {
    if (static_cast<int>(x.size()) != m) throw InvalidArgument("sphere point has the wrong dimension");
    double n2 = 0.0;
    for (double c : x) {
        if (!std::isfinite(c)) throw InvalidArgument("sphere point is not finite");
        n2 += c * c;
    }
    if (std::abs(std::sqrt(n2) - 1.0) > 1e-6) throw InvalidArgument("sphere point is not a unit vector");

    // In hyperplane coordinates y, sorting y decreasingly writes
    //   y = sum_k (y_(k-1) - y_(k)) (1_{I_k} - |I_k|/(m+1)),  I_k = indices of the k largest,
    // a nonnegative combination of the (rescaled) vertices of one maximal face.
    const auto y = to_hyperplane(x);
    std::vector<int> order(m + 1);
    std::iota(order.begin(), order.end(), 0);
    std::ranges::stable_sort(order, [&](int a, int b) { return y[a] > y[b]; });

    std::vector<double> weight(m + 1, 0.0);
    double total = 0.0;
    for (int k = 1; k <= m; ++k) {
        const double gap = y[order[k - 1]] - y[order[k]];
        const double norm = std::sqrt(static_cast<double>(k) * (m + 1 - k) / (m + 1));
        weight[k] = gap * norm;
        total += weight[k];
    }
    if (!(total > 0.0)) throw InvalidArgument("no qualifying maximal face for this point");

    SphereFace face;
    Subset prefix = 0;
    for (int k = 1; k <= m; ++k) {
        prefix |= 1u << order[k - 1];
        if (weight[k] / total > face_epsilon) face.push_back(prefix);
    }
    return face;
}

Simplex rp_face_map(std::span<const double> v, const ProjectiveTriangulation& t) {
    if (static_cast<int>(v.size()) != t.m) throw InvalidArgument("line direction has the wrong dimension");
    double n2 = 0.0;
    for (double c : v) n2 += c * c;
    const double n = std::sqrt(n2);
    if (!(n > 1e-12)) throw InvalidArgument("line direction is (numerically) zero");
    std::vector<double> unit(v.begin(), v.end());
    for (double& c : unit) c /= n;
    std::vector<VertexId> image;
    for (Subset s : sphere_face_map(unit, t.m)) image.push_back(t.vertex_of(s));
    Simplex out(std::move(image));
    if (!t.complex.contains(out)) throw Error("face map produced a simplex outside L");
    return out;
}

Simplex rp_face_map(const grassmann::GrassmannPoint& p, const ProjectiveTriangulation& t) {
    if (p.d != 1) throw InvalidArgument("face map of L needs a rank-1 projector");
    return rp_face_map(grassmann::top_eigenvector(p.projector), t);
}

}  // namespace persw::projective
