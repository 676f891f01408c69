#include <doctest.h>

#include <random>

#include "persw/error.hpp"
#include "persw/simplicial/operations.hpp"
#include "persw/z2/cochain.hpp"
#include "support/oracles.hpp"

using namespace persw;
using namespace persw::z2;

namespace {

SimplicialComplex filled_triangle() {
    return SimplicialComplex::from_simplices(3, std::vector<Simplex>{{0, 1, 2}});
}

SimplicialComplex hollow_triangle() {
    return SimplicialComplex::from_simplices(3, std::vector<Simplex>{{0, 1}, {1, 2}, {0, 2}});
}

std::vector<int> edge_values(const CochainZ2& c) {
    std::vector<int> v(c.values.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c.values.get(i);
    return v;
}

// A random flag complex on few vertices.
SimplicialComplex random_flag(std::mt19937& rng, std::size_t n, double p) {
    std::bernoulli_distribution keep(p);
    Graph g{n, {}};
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b)
            if (keep(rng)) g.edges.emplace_back(a, b);
    return clique_complex(g, 2);
}

}  // namespace

TEST_CASE("coboundary_matrix examples") {
    auto edge = SimplicialComplex::from_simplices(2, std::vector<Simplex>{{0, 1}});
    CHECK(coboundary_matrix(edge, 0) == BitMatrix{{1, 1}});

    auto points = SimplicialComplex::from_simplices(3, {});
    CHECK(coboundary_matrix(points, 0).rows() == 0);
    CHECK(coboundary_matrix(points, 0).cols() == 3);

    CHECK(coboundary_matrix(filled_triangle(), 1) == BitMatrix{{1, 1, 1}});
}

TEST_CASE("is_cocycle examples") {
    const auto k = filled_triangle();
    CHECK(is_cocycle(k, CochainZ2::zero(k, 1)));
    CHECK_FALSE(is_cocycle(k, CochainZ2::from_support(k, 1, {{0, 1}})));
    CHECK(is_cocycle(k, CochainZ2::from_support(k, 1, {{0, 1}, {1, 2}})));
}

TEST_CASE("is_coboundary examples") {
    const auto hollow = hollow_triangle();
    CHECK(is_coboundary(hollow, CochainZ2::zero(hollow, 1)));
    auto one_edge = CochainZ2::from_support(hollow, 1, {{0, 2}});
    CHECK_FALSE(oracle::brute_is_coboundary(hollow, edge_values(one_edge)));
    CHECK_FALSE(is_coboundary(hollow, one_edge));

    auto path = SimplicialComplex::from_simplices(4, std::vector<Simplex>{{0, 1}, {1, 2}, {2, 3}});
    for (std::uint32_t m = 0; m < 8; ++m) {
        auto c = CochainZ2::zero(path, 1);
        for (std::size_t e = 0; e < 3; ++e) c.values.set(e, (m >> e) & 1);
        CHECK(oracle::brute_is_coboundary(path, edge_values(c)));
        CHECK(is_coboundary(path, c));
    }
}

TEST_CASE("is_coboundary rejects non-cocycles") {
    const auto k = filled_triangle();
    CHECK_THROWS_AS(is_coboundary(k, CochainZ2::from_support(k, 1, {{0, 1}})), InvalidArgument);
}

TEST_CASE("from_support validates its simplices") {
    const auto k = hollow_triangle();
    CHECK_THROWS_AS(CochainZ2::from_support(k, 1, {{0, 1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(CochainZ2::from_support(k, 2, {{0, 1, 2}}), InvalidArgument);
}

TEST_CASE("h1_generator examples") {
    auto tree = SimplicialComplex::from_simplices(4, std::vector<Simplex>{{0, 1}, {1, 2}, {1, 3}});
    CHECK_FALSE(h1_generator(tree));

    const auto hollow = hollow_triangle();
    CHECK(oracle::brute_h1_dim(hollow) == 1);
    auto g = h1_generator(hollow);
    REQUIRE(g);
    CHECK(g->values.count() % 2 == 1);
    CHECK(is_cocycle(hollow, *g));
    CHECK_FALSE(is_coboundary(hollow, *g));
}

TEST_CASE("delta squared vanishes") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 40; ++trial) {
        auto k = random_flag(rng, 4 + rng() % 6, 0.6);
        CHECK(coboundary_matrix(k, 1).multiply(coboundary_matrix(k, 0)).is_zero());
    }
}

TEST_CASE("cohomologous cocycles get the same verdict") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        auto k = random_flag(rng, 4 + rng() % 5, 0.5);
        auto basis = gf2_kernel_basis(coboundary_matrix(k, 1));
        if (basis.empty()) continue;
        CochainZ2 c{1, basis[rng() % basis.size()]};
        BitVector x(k.vertex_count());
        for (std::size_t v = 0; v < x.size(); ++v) x.set(v, rng() & 1);
        CochainZ2 shifted{1, c.values ^ coboundary_matrix(k, 0).multiply(x)};
        CHECK(is_coboundary(k, c) == is_coboundary(k, shifted));
    }
}

TEST_CASE("h1_generator is a nontrivial cocycle and betti agrees with enumeration") {
    std::mt19937 rng(10);
    for (int trial = 0; trial < 40; ++trial) {
        auto k = random_flag(rng, 4 + rng() % 4, 0.55);
        if (k.size(1) > 14) continue;
        const int h1 = oracle::brute_h1_dim(k);
        CHECK(betti(k, 1) == static_cast<std::size_t>(h1));
        auto g = h1_generator(k);
        CHECK(g.has_value() == (h1 > 0));
        if (g) {
            CHECK(is_cocycle(k, *g));
            CHECK_FALSE(is_coboundary(k, *g));
        }
    }
}
