#include "persw/bundle/bundle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <exception>
#include <limits>
#include <string>

#include "persw/error.hpp"

namespace persw::bundle {

using grassmann::Matrix;
using grassmann::MatrixPoint;

void validate(const LiftedCloud& cloud) {
    if (!(cloud.gamma > 0.0) || !std::isfinite(cloud.gamma)) throw InvalidArgument("gamma must be positive");
    if (cloud.m < 2) throw InvalidArgument("matrix part must be at least 2 x 2");
    for (const auto& p : cloud.points) {
        if (p.x.size() != cloud.n || p.a.rows() != cloud.m || p.a.cols() != cloud.m)
            throw InvalidArgument("point dimensions do not match the cloud");
        for (double c : p.x)
            if (!std::isfinite(c)) throw InvalidArgument("point coordinates are not finite");
        for (double c : p.a.flat())
            if (!std::isfinite(c)) throw InvalidArgument("matrix entries are not finite");
    }
}

namespace {

LiftedCloud lift(std::span<const std::vector<double>> base, std::size_t count, double gamma, auto&& line_at) {
    if (base.size() != count) throw InvalidArgument("base points and lines have different lengths");
    if (!(gamma > 0.0)) throw InvalidArgument("gamma must be positive");
    LiftedCloud cloud;
    cloud.gamma = gamma;
    cloud.n = base.empty() ? 0 : base.front().size();
    for (std::size_t i = 0; i < count; ++i) {
        auto p = grassmann::line_projector(line_at(i));
        if (i == 0) cloud.m = p.projector.rows();
        cloud.points.push_back({base[i], std::move(p.projector)});
    }
    validate(cloud);
    return cloud;
}

std::vector<double> flatten(const MatrixPoint& p) {
    std::vector<double> out(p.x);
    out.insert(out.end(), p.a.flat().begin(), p.a.flat().end());
    return out;
}

}  // namespace

LiftedCloud lift_cloud(std::span<const std::vector<double>> base, std::span<const std::vector<double>> lines,
                       double gamma) {
    return lift(base, lines.size(), gamma, [&](std::size_t i) { return std::span<const double>(lines[i]); });
}

LiftedCloud lift_cloud(std::span<const std::vector<double>> base, std::span<const Matrix> projectors,
                       double gamma) {
    return lift(base, projectors.size(), gamma, [&](std::size_t i) {
        const auto& p = projectors[i];
        if (!p.is_square()) throw InvalidArgument("projector is not square");
        if (std::abs(p.trace() - 1.0) > 1e-6 || frobenius_distance(p * p, p) > 1e-6)
            throw InvalidArgument("matrix is not a rank-1 projector");
        return grassmann::top_eigenvector(p);
    });
}

double rips_index_bound(const LiftedCloud& cloud) {
    validate(cloud);
    return grassmann::tmax(cloud.points, 1, cloud.gamma) / std::sqrt(2.0);
}

DistanceMatrix distance_matrix(const LiftedCloud& cloud) {
    validate(cloud);
    const auto n = static_cast<std::ptrdiff_t>(cloud.size());
    DistanceMatrix d(cloud.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < n; ++i)
        for (std::ptrdiff_t j = i + 1; j < n; ++j) {
            const double v = grassmann::gamma_dist(cloud.points[i], cloud.points[j], cloud.gamma);
            d(i, j) = v;
            d(j, i) = v;
        }
    return d;
}

DistanceMatrix distance_matrix_serial(const LiftedCloud& cloud) {
    validate(cloud);
    DistanceMatrix d(cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i)
        for (std::size_t j = i + 1; j < cloud.size(); ++j)
            d.set(i, j, grassmann::gamma_dist(cloud.points[i], cloud.points[j], cloud.gamma));
    return d;
}

FilteredComplex lifted_rips(const LiftedCloud& cloud, double max_value, int max_dim) {
    const auto rips = rips_filtration(distance_matrix(cloud), max_value, max_dim);
    SimplicialComplex complex = rips.complex();
    std::vector<double> payloads;
    payloads.reserve(cloud.size() * cloud.payload_width());
    for (const auto& p : cloud.points) {
        const auto flat = flatten(p);
        payloads.insert(payloads.end(), flat.begin(), flat.end());
    }
    if (!cloud.points.empty()) complex.set_payloads(cloud.payload_width(), std::move(payloads));
    std::vector<std::vector<double>> values;
    for (int d = 0; d <= complex.dimension(); ++d) values.emplace_back(rips.values(d).begin(), rips.values(d).end());
    return FilteredComplex(std::move(complex), std::move(values));
}

FilteredComplex build_bundle_filtration(const LiftedCloud& cloud, double max_t) {
    const double bound = rips_index_bound(cloud);
    if (!(max_t >= 0.0) || max_t > bound)
        throw InvalidArgument("max_t = " + std::to_string(max_t) + " outside the index set [0, " +
                              std::to_string(bound) + ")");
    return lifted_rips(cloud, max_t, 2);
}

namespace {

std::size_t base_width(const SimplicialComplex& complex, const projective::ProjectiveTriangulation& t) {
    const std::size_t mm = static_cast<std::size_t>(t.m) * t.m;
    if (!complex.has_payloads() || complex.payload_width() < mm)
        throw InvalidArgument("vertex payloads do not hold an m x m matrix");
    return complex.payload_width() - mm;
}

Simplex face_value(std::span<const double> payload, std::size_t n, const projective::ProjectiveTriangulation& t) {
    const auto a = Matrix::from_flat(t.m, t.m, payload.subspan(n));
    // one decomposition serves both the medial-axis check and the line direction
    const auto eig = grassmann::jacobi_eigh(a.symmetric_part());
    const double gap = eig.values[0] - eig.values[1];
    if (gap <= grassmann::medial_gap_tolerance)
        throw MedialAxisError("vertex payload lies on the medial axis (eigen-gap " + std::to_string(gap) + ")");
    return projective::rp_face_map(eig.vector(0), t);
}

}  // namespace

std::vector<Simplex> vertex_face_values(const SimplicialComplex& complex,
                                        const projective::ProjectiveTriangulation& t) {
    const std::size_t n = base_width(complex, t);
    const auto count = static_cast<std::ptrdiff_t>(complex.vertex_count());
    std::vector<Simplex> out(complex.vertex_count());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 256)
    for (std::ptrdiff_t v = 0; v < count; ++v) {
        try {
            out[v] = face_value(complex.payload(static_cast<VertexId>(v)), n, t);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<Simplex> vertex_face_values_serial(const SimplicialComplex& complex,
                                               const projective::ProjectiveTriangulation& t) {
    const std::size_t n = base_width(complex, t);
    std::vector<Simplex> out;
    out.reserve(complex.vertex_count());
    for (VertexId v = 0; v < complex.vertex_count(); ++v) out.push_back(face_value(complex.payload(v), n, t));
    return out;
}

WeakStarResult weak_star_check(const SimplicialComplex& complex, std::span<const Simplex> values, TieBreak tie) {
    if (values.size() != complex.vertex_count()) throw InvalidArgument("one face value per vertex expected");
    // L has fewer than 64 vertices for m <= 6, so vertex sets fit in a word
    std::vector<std::uint64_t> mask(values.size(), 0);
    for (std::size_t v = 0; v < values.size(); ++v)
        for (VertexId w : values[v]) {
            if (w >= 64) throw InvalidArgument("target vertex id too large");
            mask[v] |= std::uint64_t{1} << w;
        }

    const auto adj = adjacency(complex);
    WeakStarResult result;
    VertexMap f;
    f.images.resize(values.size());
    for (VertexId v = 0; v < values.size(); ++v) {
        std::uint64_t admissible = mask[v];
        for (VertexId u : adj.neighbors(v)) admissible &= mask[u];
        if (admissible == 0) {
            result.failing_vertex = v;
            return result;
        }
        f.images[v] = tie == TieBreak::smallest ? static_cast<VertexId>(std::countr_zero(admissible))
                                                : static_cast<VertexId>(63 - std::countl_zero(admissible));
    }
    result.map = std::move(f);
    return result;
}

Approximation weak_simplicial_approximation(const SimplicialComplex& complex,
                                            const projective::ProjectiveTriangulation& t, int subdiv_limit,
                                            TieBreak tie) {
    if (complex.dimension() > 2) throw InvalidArgument("weak simplicial approximation needs dimension <= 2");
    if (subdiv_limit < 0) throw InvalidArgument("subdivision limit must be nonnegative");
    SimplicialComplex current = complex;
    for (int k = 0;; ++k) {
        const auto values = vertex_face_values(current, t);
        auto check = weak_star_check(current, values, tie);
        if (check.ok()) return {std::move(*check.map), std::move(current), k};
        if (k == subdiv_limit)
            throw SubdivisionLimitError("weak star condition fails at vertex " +
                                            std::to_string(*check.failing_vertex) + " after " +
                                            std::to_string(k) + " subdivisions",
                                        k, std::numeric_limits<double>::quiet_NaN());
        current = barycentric_subdivision(current);
    }
}

SWResult sw_class_at(const LiftedCloud& cloud, double t, const projective::ProjectiveTriangulation& tri,
                     int subdiv_limit, TieBreak tie) {
    if (cloud.m != static_cast<std::size_t>(tri.m)) throw InvalidArgument("triangulation does not match m");
    const double bound = rips_index_bound(cloud);
    if (!(t >= 0.0) || !(t < bound))
        throw InvalidArgument("t = " + std::to_string(t) + " outside the index set [0, " + std::to_string(bound) +
                              ")");
    const auto rips = lifted_rips(cloud, t, 2);
    Approximation approx;
    try {
        approx = weak_simplicial_approximation(rips.complex(), tri, subdiv_limit, tie);
    } catch (const SubdivisionLimitError& e) {
        throw SubdivisionLimitError(std::string(e.what()) + " at t = " + std::to_string(t), e.subdivisions(), t);
    }
    SWResult out;
    out.t = t;
    out.subdivisions_used = approx.subdivisions;
    out.pullback_cocycle = pullback_cochain(approx.map, approx.complex, tri.complex, tri.w1);
    out.nonzero = !z2::is_coboundary(approx.complex, out.pullback_cocycle);
    out.complex = std::move(approx.complex);
    out.approximation = std::move(approx.map);
    return out;
}

Lifebar lifebar(const LiftedCloud& cloud, const projective::ProjectiveTriangulation& tri, double resolution,
                int subdiv_limit) {
    if (!(resolution > 0.0)) throw InvalidArgument("resolution must be positive");
    Lifebar bar;
    const double bound = rips_index_bound(cloud);
    bar.t_max = bound;
    bar.resolution = resolution;

    auto eval = [&](double t) {
        const auto r = sw_class_at(cloud, t, tri, subdiv_limit);
        bar.evaluations.push_back({t, r.nonzero, r.subdivisions_used});
        return r.nonzero;
    };

    const double top = std::max(0.0, bound - resolution);
    if (!eval(top)) return bar;
    if (top == 0.0 || eval(0.0)) {
        bar.t_dagger = 0.0;
        return bar;
    }
    double lo = 0.0, hi = top;
    while (hi - lo > resolution) {
        const double mid = 0.5 * (lo + hi);
        (eval(mid) ? hi : lo) = mid;
    }
    bar.t_dagger = 0.5 * (lo + hi);
    return bar;
}

std::vector<Evaluation> evaluate_grid(const LiftedCloud& cloud, const projective::ProjectiveTriangulation& tri,
                                      std::span<const double> ts, int subdiv_limit) {
    std::vector<Evaluation> out(ts.size());
    std::exception_ptr failure;
    const auto count = static_cast<std::ptrdiff_t>(ts.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            const auto r = sw_class_at(cloud, ts[i], tri, subdiv_limit);
            out[i] = {ts[i], r.nonzero, r.subdivisions_used};
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

std::vector<Evaluation> evaluate_grid_serial(const LiftedCloud& cloud, const projective::ProjectiveTriangulation& tri,
                                             std::span<const double> ts, int subdiv_limit) {
    std::vector<Evaluation> out;
    for (double t : ts) {
        const auto r = sw_class_at(cloud, t, tri, subdiv_limit);
        out.push_back({t, r.nonzero, r.subdivisions_used});
    }
    return out;
}

namespace {

void check_comparable(const LiftedCloud& a, const LiftedCloud& b) {
    validate(a);
    validate(b);
    if (a.points.empty() || b.points.empty()) throw InvalidArgument("Hausdorff distance of an empty cloud");
    if (a.n != b.n || a.m != b.m || a.gamma != b.gamma)
        throw InvalidArgument("clouds live in different spaces or use different gamma");
}

double directed_serial(const LiftedCloud& a, const LiftedCloud& b) {
    double worst = 0.0;
    for (const auto& p : a.points) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : b.points) best = std::min(best, grassmann::gamma_dist(p, q, a.gamma));
        worst = std::max(worst, best);
    }
    return worst;
}

double directed_parallel(const LiftedCloud& a, const LiftedCloud& b) {
    double worst = 0.0;
    const auto count = static_cast<std::ptrdiff_t>(a.size());
#pragma omp parallel for reduction(max : worst) schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto& q : b.points) best = std::min(best, grassmann::gamma_dist(a.points[i], q, a.gamma));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

double hausdorff_distance(const LiftedCloud& a, const LiftedCloud& b) {
    check_comparable(a, b);
    return std::max(directed_parallel(a, b), directed_parallel(b, a));
}

double hausdorff_distance_serial(const LiftedCloud& a, const LiftedCloud& b) {
    check_comparable(a, b);
    return std::max(directed_serial(a, b), directed_serial(b, a));
}

}  // namespace persw::bundle
