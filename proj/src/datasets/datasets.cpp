#include "persw/datasets/datasets.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "persw/error.hpp"

namespace persw::datasets {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_count(int k, const char* what) {
    if (k < 3) throw InvalidArgument(std::string(what) + " must be at least 3, got " + std::to_string(k));
}

bundle::LiftedCloud circle(int k, double gamma, double line_factor) {
    check_count(k, "circle sample size");
    std::vector<std::vector<double>> base, lines;
    for (int j = 0; j < k; ++j) {
        const double th = two_pi * j / k;
        base.push_back({std::cos(th), std::sin(th)});
        lines.push_back({std::cos(line_factor * th), std::sin(line_factor * th)});
    }
    return bundle::lift_cloud(base, lines, gamma);
}

using Vec3 = std::array<double, 3>;

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 klein3(double u, double v) {
    const double r = klein_radius + std::cos(u / 2) * std::sin(v) - std::sin(u / 2) * std::sin(2 * v);
    return {r * std::cos(u), r * std::sin(u), std::sin(u / 2) * std::sin(v) + std::cos(u / 2) * std::sin(2 * v)};
}

}  // namespace

Kind parse_kind(const std::string& name) {
    if (name == "circle-normal") return Kind::circle_normal;
    if (name == "mobius" || name == "circle-tautological") return Kind::circle_tautological;
    if (name == "torus") return Kind::torus_normal;
    if (name == "klein") return Kind::klein_normal;
    throw InvalidArgument("unknown dataset '" + name + "'");
}

std::string to_string(Kind kind) {
    switch (kind) {
        case Kind::circle_normal: return "circle-normal";
        case Kind::circle_tautological: return "mobius";
        case Kind::torus_normal: return "torus";
        case Kind::klein_normal: return "klein";
    }
    return "unknown";
}

bundle::LiftedCloud circle_normal(int k, double gamma) { return circle(k, gamma, 1.0); }

bundle::LiftedCloud circle_tautological(int k, double gamma) { return circle(k, gamma, 0.5); }

bundle::LiftedCloud torus_normal(int k_u, int k_v, double gamma, double scale) {
    check_count(k_u, "grid count");
    check_count(k_v, "grid count");
    if (!(scale > 0.0)) throw InvalidArgument("scale must be positive");
    constexpr double big = 2.0, small = 1.0;
    std::vector<std::vector<double>> base, lines;
    for (int i = 0; i < k_u; ++i)
        for (int j = 0; j < k_v; ++j) {
            const double u = two_pi * i / k_u, v = two_pi * j / k_v;
            const double w = big + small * std::cos(v);
            base.push_back({scale * w * std::cos(u), scale * w * std::sin(u), scale * small * std::sin(v)});
            lines.push_back({std::cos(v) * std::cos(u), std::cos(v) * std::sin(u), std::sin(v)});
        }
    return bundle::lift_cloud(base, lines, gamma);
}

std::vector<double> klein_point(double u, double v) {
    const auto p = klein3(u, v);
    return {p[0], p[1], p[2]};
}

bundle::LiftedCloud klein_normal(int k_u, int k_v, double gamma, double scale) {
    check_count(k_u, "grid count");
    check_count(k_v, "grid count");
    if (!(scale > 0.0)) throw InvalidArgument("scale must be positive");
    constexpr double h = 1e-5;
    std::vector<std::vector<double>> base, lines;
    for (int i = 0; i < k_u; ++i)
        for (int j = 0; j < k_v; ++j) {
            const double u = two_pi * i / k_u, v = two_pi * j / k_v;
            const auto p = klein3(u, v);
            const auto up = klein3(u + h, v), um = klein3(u - h, v);
            const auto vp = klein3(u, v + h), vm = klein3(u, v - h);
            Vec3 du, dv;
            for (int c = 0; c < 3; ++c) {
                du[c] = (up[c] - um[c]) / (2 * h);
                dv[c] = (vp[c] - vm[c]) / (2 * h);
            }
            const auto nrm = cross(du, dv);
            base.push_back({scale * p[0], scale * p[1], scale * p[2]});
            lines.push_back({nrm[0], nrm[1], nrm[2]});
        }
    return bundle::lift_cloud(base, lines, gamma);
}

bundle::LiftedCloud add_noise(const bundle::LiftedCloud& cloud, double sigma, std::uint64_t seed) {
    if (!(sigma >= 0.0)) throw InvalidArgument("noise level must be nonnegative");
    if (sigma == 0.0) return cloud;
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, sigma);
    std::vector<std::vector<double>> base, lines;
    for (const auto& p : cloud.points) {
        auto x = p.x;
        for (double& c : x) c += noise(rng);
        auto dir = grassmann::top_eigenvector(p.a);
        for (double& c : dir) c += noise(rng);
        base.push_back(std::move(x));
        lines.push_back(std::move(dir));
    }
    return bundle::lift_cloud(base, lines, cloud.gamma);
}

bundle::LiftedCloud discrete_tangent(std::span<const std::vector<double>> points, double gamma, bool closed) {
    const std::size_t n = points.size();
    if (n < 3) throw InvalidArgument("discrete tangent needs at least 3 points");
    std::vector<std::vector<double>> lines;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t next = i + 1, prev = i - 1;
        if (closed) {
            next = (i + 1) % n;
            prev = (i + n - 1) % n;
        } else {
            next = std::min(i + 1, n - 1);
            prev = i == 0 ? 0 : i - 1;
        }
        if (points[next].size() != points[i].size() || points[prev].size() != points[i].size())
            throw InvalidArgument("points have different dimensions");
        std::vector<double> d(points[i].size());
        for (std::size_t c = 0; c < d.size(); ++c) d[c] = points[next][c] - points[prev][c];
        lines.push_back(std::move(d));
    }
    return bundle::lift_cloud(points, lines, gamma);
}

bundle::LiftedCloud generate(const GeneratorSpec& spec) {
    bundle::LiftedCloud cloud;
    const int kv = spec.count_v > 0 ? spec.count_v : spec.count;
    switch (spec.kind) {
        case Kind::circle_normal: cloud = circle_normal(spec.count, spec.gamma); break;
        case Kind::circle_tautological: cloud = circle_tautological(spec.count, spec.gamma); break;
        case Kind::torus_normal: cloud = torus_normal(spec.count, kv, spec.gamma, spec.scale); break;
        case Kind::klein_normal: cloud = klein_normal(spec.count, kv, spec.gamma, spec.scale); break;
    }
    return add_noise(cloud, spec.noise, spec.seed);
}

}  // namespace persw::datasets
