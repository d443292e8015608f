#include <catch2/catch_amalgamated.hpp>

#include "circroute/graph.hpp"

using namespace circroute;

namespace {
// deterministic hand-rolled generator for property checks
struct Lcg {
    unsigned long long state;
    long long next(long long bound) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long long>((state >> 17) % static_cast<unsigned long long>(bound));
    }
};
}  // namespace

TEST_CASE("build derives q and r") {
    CirculantGraph g1(7, 2);
    CHECK(g1.q() == 3);
    CHECK(g1.r() == 1);
    CirculantGraph g2(12, 3);
    CHECK(g2.q() == 4);
    CHECK(g2.r() == 0);
}

TEST_CASE("build rejects invalid parameters naming the constraint") {
    CHECK_THROWS_WITH(CirculantGraph(12, 6), Catch::Matchers::ContainsSubstring("s < n/2"));
    CHECK_THROWS_WITH(CirculantGraph(12, 7), Catch::Matchers::ContainsSubstring("s < n/2"));
    CHECK_THROWS_WITH(CirculantGraph(12, 1), Catch::Matchers::ContainsSubstring("s > 1"));
    CHECK_THROWS_WITH(CirculantGraph(12, 0), Catch::Matchers::ContainsSubstring("s > 1"));
    CHECK_THROWS_WITH(CirculantGraph(4, 2), Catch::Matchers::ContainsSubstring("n >= 5"));
}

TEST_CASE("bfs distances") {
    CirculantGraph g72(7, 2);
    CHECK(distance(g72, 0, 3) == 2);  // 0,2,3
    CirculantGraph g123(12, 3);
    CHECK(distance(g123, 0, 5) == 3);  // 0,3,6,5
    CHECK(distance(g123, 4, 4) == 0);
    CHECK(distance(g72, 5, 5) == 0);
}

TEST_CASE("distance sums from node zero") {
    CHECK(distance_sum_from_zero(CirculantGraph(7, 2)) == 8);
    CHECK(distance_sum_from_zero(CirculantGraph(12, 3)) == 20);
    CHECK(distance_sum_from_zero(CirculantGraph(25, 5)) == 60);  // sqrt(n)(n-1)/2
}

TEST_CASE("half-line cut") {
    CHECK(cut_size_halfline(CirculantGraph(7, 2)) == 6);
    CHECK(cut_size_halfline(CirculantGraph(12, 3)) == 8);
    CHECK(cut_size_halfline(CirculantGraph(25, 5)) == 12);
}

TEST_CASE("cut equals 2s+2 for every valid instance up to n=120") {
    for (long long n = 5; n <= 120; ++n)
        for (long long s = 2; 2 * s < n; ++s)
            REQUIRE(cut_size_halfline(CirculantGraph(n, s)) == 2 * s + 2);
}

TEST_CASE("distance is symmetric and translation-invariant") {
    Lcg rng{42};
    for (auto [n, s] : {std::pair<long long, long long>{7, 2}, {12, 3}, {25, 5}, {34, 10},
                        {61, 8}, {97, 11}}) {
        CirculantGraph g(n, s);
        auto dist0 = distances_from(g, 0);
        for (int trial = 0; trial < 24; ++trial) {
            Node x = rng.next(n), y = rng.next(n), k = rng.next(n);
            auto dx = distances_from(g, x);
            REQUIRE(dx[static_cast<size_t>(y)] == distances_from(g, y)[static_cast<size_t>(x)]);
            // vertex-transitivity: d(x,y) = d(x+k, y+k) = d(0, y-x)
            REQUIRE(dx[static_cast<size_t>(y)] ==
                    distances_from(g, g.add(x, k))[static_cast<size_t>(g.add(y, k))]);
            REQUIRE(dx[static_cast<size_t>(y)] == dist0[static_cast<size_t>(g.sub(y, x))]);
        }
    }
}

TEST_CASE("every node has exactly four distinct neighbours") {
    for (auto [n, s] : {std::pair<long long, long long>{5, 2}, {7, 2}, {12, 3}, {30, 7}}) {
        CirculantGraph g(n, s);
        for (Node x = 0; x < n; ++x) {
            auto nb = g.neighbours(x);
            std::sort(nb.begin(), nb.end());
            REQUIRE(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
            for (Node v : nb) REQUIRE((v >= 0 && v < n && v != x));
        }
    }
}
