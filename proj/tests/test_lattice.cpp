#include <catch2/catch_amalgamated.hpp>

#include "circroute/lattice.hpp"

using namespace circroute;

TEST_CASE("labelling") {
    CirculantGraph g72(7, 2), g123(12, 3);
    CHECK(label(g72, {1, 1}) == 3);
    CHECK(label(g123, {2, 1}) == 5);
    CHECK(label(g123, {3, -1}) == 0);  // member of X
    CHECK(label(g72, {-1, -1}) == 4);  // canonical residue, never negative
}

TEST_CASE("packed basis cases") {
    auto b72 = packed_basis(CirculantGraph(7, 2));
    REQUIRE(b72);
    CHECK(b72->tag == BasisCase::A);
    CHECK(b72->a == LatticePoint{2, -1});
    CHECK(b72->b == LatticePoint{1, 3});

    auto b123 = packed_basis(CirculantGraph(12, 3));
    REQUIRE(b123);
    CHECK(b123->tag == BasisCase::A);
    CHECK(b123->a == LatticePoint{3, -1});
    CHECK(b123->b == LatticePoint{0, 4});

    // q=3, r=4: r > q and r+q = 7 < s+1 = 11
    CHECK_FALSE(packed_basis(CirculantGraph(34, 10)).has_value());
}

TEST_CASE("returned bases satisfy the packedness inequality and lie in X") {
    for (long long n = 5; n <= 200; ++n) {
        for (long long s = 2; 2 * s < n; ++s) {
            CirculantGraph g(n, s);
            auto basis = packed_basis(g);
            if (!basis) {
                REQUIRE((g.r() > g.q() && g.r() + g.q() < g.s() + 1));
                continue;
            }
            REQUIRE(is_packed(basis->a, basis->b));
            REQUIRE(label(g, basis->a) == 0);
            REQUIRE(label(g, basis->b) == 0);
        }
    }
}

TEST_CASE("case tie-break prefers A over B at 2r == s+1") {
    // n=23, s=3, q=7, r=2: 2r = 4 = s+1
    CirculantGraph g(23, 3);
    REQUIRE(g.r() == 2);
    REQUIRE(2 * g.r() == g.s() + 1);
    auto basis = packed_basis(g);
    REQUIRE(basis);
    CHECK(basis->tag == BasisCase::A);
    CHECK(basis->b == LatticePoint{2, 7});
}

TEST_CASE("corner distances at pinned targets") {
    CirculantGraph g123(12, 3);
    auto b123 = packed_basis(g123);
    REQUIRE(b123);
    CHECK(corner_distance(g123, *b123, 5) == 3);  // v=(2,1)
    CHECK(corner_distance(g123, *b123, 0) == 0);

    CirculantGraph g72(7, 2);
    auto b72 = packed_basis(g72);
    REQUIRE(b72);
    CHECK(corner_distance(g72, *b72, 3) == 2);  // v=(1,1)
    CHECK(corner_distance(g72, *b72, 0) == 0);
}

TEST_CASE("parallelogram bijection and oracle equivalence, n <= 100") {
    for (long long n = 5; n <= 100; ++n) {
        for (long long s = 2; 2 * s < n; ++s) {
            CirculantGraph g(n, s);
            auto basis = packed_basis(g);
            if (!basis) continue;
            ParallelogramIndex index(g, *basis);  // ctor asserts the n-point bijection
            auto dist = distances_from(g, 0);
            for (Node t = 0; t < n; ++t)
                REQUIRE(index.corner_distance(t) == dist[static_cast<size_t>(t)]);
        }
    }
}

TEST_CASE("distance-sum lower bound (applicability and value)") {
    auto b72 = distance_sum_lower_bound(CirculantGraph(7, 2));
    REQUIRE(b72);
    CHECK(*b72 == 4);
    auto b123 = distance_sum_lower_bound(CirculantGraph(12, 3));
    REQUIRE(b123);
    CHECK(*b123 == 8);
    CHECK_FALSE(distance_sum_lower_bound(CirculantGraph(34, 10)).has_value());
}

TEST_CASE("square-case distance sum") {
    auto v25 = sqrt_case_distance_sum(CirculantGraph(25, 5));
    REQUIRE(v25);
    CHECK(*v25 == 60);
    auto v36 = sqrt_case_distance_sum(CirculantGraph(36, 6));
    REQUIRE(v36);
    CHECK(*v36 == 105);
    CHECK(*v36 == distance_sum_from_zero(CirculantGraph(36, 6)));
    CHECK_FALSE(sqrt_case_distance_sum(CirculantGraph(25, 6)).has_value());
}

TEST_CASE("square-case sum matches BFS for every perfect square up to 196") {
    for (long long root = 3; root * root <= 196; ++root) {
        CirculantGraph g(root * root, root);
        auto exact = sqrt_case_distance_sum(g);
        REQUIRE(exact);
        REQUIRE(*exact == distance_sum_from_zero(g));
    }
}

TEST_CASE("distance sum respects the lower bound when it applies, n <= 150") {
    for (long long n = 5; n <= 150; ++n) {
        for (long long s = 2; 2 * s < n; ++s) {
            CirculantGraph g(n, s);
            if (auto bound = distance_sum_lower_bound(g))
                REQUIRE(distance_sum_from_zero(g) >= *bound);
        }
    }
}
