// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number of failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "persw/bundle/bundle.hpp"
#include "persw/datasets/datasets.hpp"
#include "persw/error.hpp"
#include "persw/grassmann/grassmann.hpp"
#include "persw/projective/projective.hpp"
#include "persw/simplicial/operations.hpp"
#include "persw/z2/cochain.hpp"
#include "persw/z2/persistence.hpp"
#include "support/oracles.hpp"
#include "support/quotient_oracle.hpp"

using namespace persw;
using grassmann::Matrix;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::vector<double> random_unit(std::mt19937& rng, std::size_t m) {
    std::normal_distribution<double> g;
    std::vector<double> v(m);
    double n = 0;
    for (auto& c : v) n += (c = g(rng)) * c;
    for (auto& c : v) c /= std::sqrt(n);
    return v;
}

Matrix random_projector(std::mt19937& rng, std::size_t m, int d) {
    std::vector<std::vector<double>> basis;
    while (static_cast<int>(basis.size()) < d) {
        auto v = random_unit(rng, m);
        for (const auto& b : basis) {
            double dot = 0;
            for (std::size_t i = 0; i < m; ++i) dot += v[i] * b[i];
            for (std::size_t i = 0; i < m; ++i) v[i] -= dot * b[i];
        }
        double n = 0;
        for (double c : v) n += c * c;
        if (n < 1e-6) continue;
        for (auto& c : v) c /= std::sqrt(n);
        basis.push_back(v);
    }
    Matrix p(m, m);
    for (const auto& b : basis)
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) p(i, j) += b[i] * b[j];
    return p;
}

std::string show(const bundle::Lifebar& bar) {
    return bar.t_dagger ? fmt::format("t_dagger = {:.4f}", *bar.t_dagger) : std::string("empty");
}

const projective::ProjectiveTriangulation& rp(int m) {
    static const auto t2 = projective::triangulate_rp(2);
    static const auto t3 = projective::triangulate_rp(3);
    return m == 2 ? t2 : t3;
}

Outcome projection_optimality() {
    std::mt19937 rng(2024);
    std::normal_distribution<double> g;
    int tested = 0, wins = 0;
    while (tested < 200) {
        const std::size_t m = tested % 2 ? 3 : 2;
        const int d = m == 3 && tested % 4 == 1 ? 2 : 1;
        Matrix a(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) a(i, j) = g(rng);
        const auto eig = grassmann::jacobi_eigh(a.symmetric_part());
        if (eig.values[d - 1] - eig.values[d] <= 0.1) continue;
        ++tested;
        const double mine = grassmann::frobenius_distance(a.symmetric_part(), grassmann::project_grassmannian(a, d).projector);
        bool ok = true;
        for (int q = 0; q < 1000 && ok; ++q)
            ok = mine <= grassmann::frobenius_distance(a.symmetric_part(), random_projector(rng, m, d)) + 1e-8;
        wins += ok;
    }
    return {wins == tested, fmt::format("{}/{} matrices beat 1000 random projectors", wins, tested)};
}

Outcome medial_distance_of_projectors() {
    std::mt19937 rng(7);
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
        const std::size_t m = 2 + i % 3;
        const int d = 1 + i % static_cast<int>(m - 1);
        worst = std::max(worst, std::abs(grassmann::medial_distance(random_projector(rng, m, d), d) - std::sqrt(2.0) / 2));
    }
    return {worst <= 1e-9, fmt::format("max deviation {:.2e} over 50 projectors", worst)};
}

Outcome projective_triangulations() {
    const auto& t2 = rp(2);
    const auto& t3 = rp(3);
    bool ok = t2.complex.vertex_count() == 3 && t2.complex.size(1) == 3 && z2::betti(t2.complex, 1) == 1;
    ok = ok && t3.complex.vertex_count() == 7 && t3.complex.size(1) == 18 && t3.complex.size(2) == 12 &&
         t3.complex.euler_characteristic() == 1 && z2::betti(t3.complex, 1) == 1;
    for (int m : {2, 3}) {
        const auto expected = oracle::enumerate_quotient(m);
        for (int d = 0; d < m; ++d) ok = ok && oracle::simplices_as_labels(rp(m), d) == expected[d];
        ok = ok && oracle::betti(rp(m).complex, 1) == 1;
    }
    return {ok, fmt::format("m=2: ({}, {}), m=3: ({}, {}, {}), chi = {}", t2.complex.vertex_count(),
                            t2.complex.size(1), t3.complex.vertex_count(), t3.complex.size(1), t3.complex.size(2),
                            t3.complex.euler_characteristic())};
}

Outcome mobius_lifebar() {
    const auto y = datasets::circle_tautological(60, 1.0);
    const auto bar = bundle::lifebar(y, rp(2), 0.02);
    const bool at03 = bundle::sw_class_at(y, 0.3, rp(2)).nonzero;
    const bool at045 = bundle::sw_class_at(y, 0.45, rp(2)).nonzero;
    const bool ok = bar.t_dagger && *bar.t_dagger <= 0.05 && at03 && at045;
    return {ok, fmt::format("{} (need <= 0.05), nonzero at 0.3: {}, at 0.45: {}", show(bar), at03, at045)};
}

Outcome circle_normal_lifebar() {
    const auto x1 = datasets::circle_normal(60, 1.0);
    const auto bar1 = bundle::lifebar(x1, rp(2), 0.01);

    const auto x2 = datasets::circle_normal(60, 2.0);
    const auto bar2 = bundle::lifebar(x2, rp(2), 0.02);
    // grid oracle over the whole index set [0, 1)
    std::vector<double> ts;
    for (int i = 0; i < 50; ++i) ts.push_back(0.02 * i);
    const auto grid = bundle::evaluate_grid(x2, rp(2), ts);
    const auto first = std::ranges::find_if(grid, [](const auto& e) { return e.nonzero; });
    const std::string grid_note =
        first == grid.end() ? std::string("grid: zero on all of [0, 0.98]") : fmt::format("grid: first nonzero at {:.2f}", first->t);

    const double target = 1.0 / std::sqrt(2.0);
    const bool ok2 = bar2.t_dagger && std::abs(*bar2.t_dagger - target) <= 0.08;
    return {bar1.empty() && ok2, fmt::format("gamma=1: {}; gamma=2: {} (need {:.3f} +- 0.08), {}", show(bar1),
                                             show(bar2), target, grid_note)};
}

Outcome mobius_h1_death() {
    const auto y = datasets::circle_tautological(100, 1.0);
    const auto bars = z2::barcode(bundle::lifted_rips(y, 1.5, 2), 1);
    const auto longest = bars.longest(1);
    const double lo = std::sqrt(1.5) / std::sqrt(2.0), hi = std::sqrt(1.5);
    const bool ok = bars.count(1) > 0 && !longest.is_infinite() && longest.death >= lo && longest.death <= hi;
    return {ok, fmt::format("longest H1 bar [{:.4f}, {:.4f}), need death in [{:.3f}, {:.3f}]", longest.birth,
                            longest.death, lo, hi)};
}

Outcome stability() {
    const double res = 0.02;
    const auto clean = datasets::circle_tautological(60, 1.0);
    const auto base = bundle::lifebar(clean, rp(2), res);
    int ok = 0;
    double worst_slack = 1e300;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto noisy = datasets::add_noise(clean, 0.03, seed);
        const auto bar = bundle::lifebar(noisy, rp(2), res);
        const double h = bundle::hausdorff_distance(clean, noisy);
        if (bar.empty() != base.empty()) continue;
        if (bar.empty()) {
            ++ok;
            continue;
        }
        const double slack = h + 2 * res - std::abs(*bar.t_dagger - *base.t_dagger);
        worst_slack = std::min(worst_slack, slack);
        ok += slack >= 0;
    }
    return {ok == 10, fmt::format("{}/10 jitters within bound, clean {}, tightest slack {:.4f}", ok, show(base), worst_slack)};
}

Outcome orientability() {
    const auto torus = datasets::torus_normal(12, 12, 1.0, 0.5);
    const auto klein = datasets::klein_normal(16, 16, 1.0, 0.5);
    const auto bt = bundle::lifebar(torus, rp(3), 0.01);
    const auto bk = bundle::lifebar(klein, rp(3), 0.01);
    return {bt.empty() && !bk.empty(), fmt::format("torus: {}, klein: {} (surfaces scaled by 0.5)", show(bt), show(bk))};
}

SimplicialComplex random_flag(std::mt19937& rng, std::size_t n, double p) {
    std::bernoulli_distribution keep(p);
    Graph g{n, {}};
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            if (keep(rng)) g.edges.emplace_back(a, b);
    return clique_complex(g, 2);
}

Outcome property_suites() {
    std::mt19937 rng(99);
    int checks = 0, failures = 0;
    auto expect = [&](bool b) {
        ++checks;
        failures += !b;
    };

    // delta^1 delta^0 = 0
    for (int trial = 0; trial < 200; ++trial) {
        const auto k = random_flag(rng, 4 + trial % 6, 0.6);
        auto c = z2::CochainZ2::zero(k, 0);
        for (std::size_t v = 0; v < c.values.size(); ++v) c.values.set(v, rng() & 1);
        expect(z2::coboundary(k, z2::coboundary(k, c)).is_zero());
    }

    // pullback along real weak simplicial approximations commutes with delta;
    // tie-break independence of the verdict
    std::uniform_real_distribution<double> tdist(0.02, 0.48);
    for (int trial = 0; trial < 40; ++trial) {
        auto c = trial % 2 ? datasets::circle_tautological(30, 1.0) : datasets::circle_normal(30, 1.0);
        c = datasets::add_noise(c, 0.02, trial);
        const double t = tdist(rng);
        const auto r = bundle::sw_class_at(c, t, rp(2));
        expect(bundle::sw_class_at(c, t, rp(2), bundle::default_subdiv_limit, bundle::TieBreak::largest).nonzero ==
               r.nonzero);
        const auto& target = rp(2).complex;
        auto x = z2::CochainZ2::zero(target, 0);
        for (std::size_t v = 0; v < x.values.size(); ++v) x.values.set(v, rng() & 1);
        const auto pulled = pullback_cochain(r.approximation, r.complex, target, z2::coboundary(target, x));
        auto fx = z2::CochainZ2::zero(r.complex, 0);
        for (std::size_t v = 0; v < fx.values.size(); ++v) fx.values.set(v, x.values.get(r.approximation(v)));
        expect(pulled == z2::coboundary(r.complex, fx));
    }

    // rp_face_map antipodal invariance
    for (int m : {2, 3})
        for (int trial = 0; trial < 500; ++trial) {
            auto v = random_unit(rng, m);
            const auto a = projective::rp_face_map(v, rp(m));
            for (auto& x : v) x = -x;
            expect(projective::rp_face_map(v, rp(m)) == a);
        }

    // Rips monotonicity: sublevel complexes grow, and coarser caps contain finer ones
    for (int trial = 0; trial < 20; ++trial) {
        const auto c = datasets::add_noise(datasets::circle_tautological(25, 1.0), 0.05, 100 + trial);
        const double t1 = tdist(rng), t2 = t1 + 0.3 * tdist(rng);
        const auto f1 = bundle::lifted_rips(c, t1, 2), f2 = bundle::lifted_rips(c, t2, 2);
        for (int d = 0; d <= f1.complex().dimension(); ++d)
            for (std::size_t i = 0; i < f1.complex().size(d); ++i) {
                const auto s = f1.complex().simplex_at(d, i);
                const auto j = f2.complex().find(s);
                expect(j.has_value() && f2.value(d, *j) == f1.value(d, i));
                for (const auto v : s) expect(f1.value(0, v) <= f1.value(d, i));
            }
    }
    return {failures == 0, fmt::format("{} checks, {} failures", checks, failures)};
}

std::vector<SimplicialComplex> gf2_fixtures() {
    using S = std::vector<Simplex>;
    std::vector<SimplicialComplex> out{
        SimplicialComplex::from_simplices(3, S{{0, 1}, {1, 2}, {0, 2}}),
        SimplicialComplex::from_simplices(3, S{{0, 1, 2}}),
        SimplicialComplex::from_simplices(4, S{{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
        SimplicialComplex::from_simplices(4, S{{0, 1, 2}, {0, 2, 3}}),
        SimplicialComplex::from_simplices(6, S{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}),
        SimplicialComplex::from_simplices(5, S{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}),
        // octahedron boundary
        SimplicialComplex::from_simplices(6, S{{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {1, 2, 4}, {1, 2, 5},
                                               {1, 3, 4}, {1, 3, 5}}),
        // minimal Moebius strip
        SimplicialComplex::from_simplices(5, S{{0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 0}, {4, 0, 1}}),
        // two squares sharing a vertex
        SimplicialComplex::from_simplices(7, S{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {4, 5}, {5, 6}, {0, 6}}),
        SimplicialComplex::from_simplices(2, S{}),
        projective::triangulate_rp(2).complex,
    };
    std::mt19937 rng(12);
    while (out.size() < 120) {
        const auto k = random_flag(rng, 3 + rng() % 6, 0.5);
        if (k.size(1) <= 12) out.push_back(k);
    }
    return out;
}

Outcome gf2_oracle_equivalence() {
    int complexes = 0, cochains = 0, failures = 0;
    for (const auto& k : gf2_fixtures()) {
        if (k.size(1) > 12) continue;
        ++complexes;
        const std::size_t ne = k.size(1);
        for (std::uint32_t mask = 0; mask < (1u << ne); ++mask) {
            auto c = z2::CochainZ2::zero(k, 1);
            std::vector<int> values(ne);
            for (std::size_t e = 0; e < ne; ++e) c.values.set(e, values[e] = (mask >> e) & 1);
            if (!oracle::brute_is_cocycle(k, values)) continue;
            ++cochains;
            failures += z2::is_coboundary(k, c) != oracle::brute_is_coboundary(k, values);
        }
        const auto gen = z2::h1_generator(k);
        const int dim = oracle::brute_h1_dim(k);
        if (dim == 0) {
            failures += gen.has_value();
        } else if (!gen) {
            ++failures;
        } else {
            std::vector<int> values(ne);
            for (std::size_t e = 0; e < ne; ++e) values[e] = gen->values.get(e);
            failures += !oracle::brute_is_cocycle(k, values) || oracle::brute_is_coboundary(k, values);
        }
    }
    return {failures == 0, fmt::format("{} complexes, {} cocycles, {} disagreements", complexes, cochains, failures)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"grassmannian projection optimality", projection_optimality},
        {"medial distance of Grassmannian points", medial_distance_of_projectors},
        {"projective triangulations", projective_triangulations},
        {"Moebius lifebar", mobius_lifebar},
        {"circle-normal lifebar", circle_normal_lifebar},
        {"H1 death of the Moebius circle", mobius_h1_death},
        {"lifebar stability under jitter", stability},
        {"orientability discrimination", orientability},
        {"property suites", property_suites},
        {"GF(2) oracle equivalence", gf2_oracle_equivalence},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, fmt::format("exception: {}", e.what())};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failed += !o.pass;
        std::printf("%s %2zu %s: %s [%.2fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed;
}
