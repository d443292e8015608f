#include <catch2/catch_amalgamated.hpp>

#include "circroute/verify.hpp"
#include "circroute/wavelength.hpp"

using namespace circroute;

TEST_CASE("path_class reads signed step counts") {
    CirculantGraph g123(12, 3);
    CHECK(path_class(g123, OrientedPath{{0, 3, 6, 5}, {}}) == PathClass{2, -1});
    CirculantGraph g72(7, 2);
    CHECK(path_class(g72, OrientedPath{{0, 2, 3}, {}}) == PathClass{1, 1});
    CHECK(path_class(g72, OrientedPath{{0, 6}, {}}) == PathClass{0, -1});
}

TEST_CASE("path_class rejects malformed paths") {
    CirculantGraph g(12, 3);
    // ring step before a skip step
    CHECK_THROWS_AS(path_class(g, OrientedPath{{0, 1, 4}, {}}), DomainError);
    // non-adjacent hop
    CHECK_THROWS_AS(path_class(g, OrientedPath{{0, 5}, {}}), DomainError);
    // direction change within the ring run
    CHECK_THROWS_AS(path_class(g, OrientedPath{{0, 1, 0}, {}}), DomainError);
}

TEST_CASE("alpha and beta") {
    CHECK(alpha_beta(CirculantGraph(12, 3), 1) == std::pair<long long, long long>{1, 3});
    CHECK(alpha_beta(CirculantGraph(20, 4), 2) == std::pair<long long, long long>{1, 2});
    CHECK(alpha_beta(CirculantGraph(25, 5), 2) == std::pair<long long, long long>{2, 5});
    CHECK_THROWS_AS(alpha_beta(CirculantGraph(12, 3), 0), DomainError);
    for (long long j = 1; j <= 12; ++j) {
        auto [alpha, beta] = alpha_beta(CirculantGraph(60, 25), j);
        REQUIRE(alpha * 25 == beta * j);  // alpha*s = beta*|j|
        for (long long smaller = 1; smaller < alpha; ++smaller)
            REQUIRE(smaller * 25 % j != 0);  // minimality of alpha
    }
}

TEST_CASE("colour_of at pinned inputs") {
    CirculantGraph g(7, 2);
    CHECK(colour_of(g, 0, {0, 1}, Variant::Arc) == Colour{0, 0, 1, 1});
    CHECK(colour_of(g, 4, {0, 1}, Variant::Arc) == Colour{2, 0, 1, 1});  // x > n/2, x_alpha even
    CHECK(colour_of(g, 0, {1, 0}, Variant::Arc) == Colour{0, 1, 0, 1});
}

TEST_CASE("negative-ring classes reuse the reflected colour; edge variant flips sign") {
    CirculantGraph g(12, 3);
    const PathClass cls{2, -1};
    for (Node x = 0; x < 12; ++x) {
        Colour arc = colour_of(g, x, cls, Variant::Arc);
        Colour mirror = colour_of(g, x, {-2, 1}, Variant::Arc);
        REQUIRE(arc == mirror);
        Colour edge = colour_of(g, x, cls, Variant::Edge);
        REQUIRE(edge.sign == -1);
        REQUIRE(edge.c1 == arc.c1);
        REQUIRE(edge.c2 == arc.c2);
        REQUIRE(edge.c3 == arc.c3);
    }
}

TEST_CASE("step-2 case boundaries are pinned") {
    // (26,5): q=5, floor(q/2)=2, so the blocks split at 5 and 10; j=2
    CirculantGraph g(26, 5);
    const long long j = 2;
    CHECK(colour_step2_case(g, 0, j) == 'a');    // x0 = 0 <= s-j
    CHECK(colour_step2_case(g, 4, j) == 'b');    // x = 4 < (h-1)s = 5, x0 = 4 > 3
    CHECK(colour_step2_case(g, 5, j) == 'a');    // x0 = 0
    CHECK(colour_step2_case(g, 9, j) == 'c');    // 5 <= 9 < 10, x0 = 4 > 3
    CHECK(colour_step2_case(g, 10, j) == 'd');   // block boundary is inclusive on the left
    CHECK(colour_step2_case(g, 14, j) == 'e');   // x0 = 4 > 3
    CHECK(colour_step2_case(g, 20, j) == 'd');   // x0 = 0
    CHECK(colour_step2_case(g, 24, j) == 'e');   // x = n - j exactly, x0 = 4 > 3
    CHECK(colour_step2_case(g, 25, j) == 'f');   // x > n - j
}

TEST_CASE("step-2 ranges partition the sources for every class") {
    for (auto [n, s] : {std::pair<long long, long long>{7, 2}, {12, 3}, {26, 5}, {34, 10}, {61, 8}}) {
        CirculantGraph g(n, s);
        Routing rt(g);
        for (long long d = 1; d < n; ++d) {
            PathClass c = rt.class_for_difference(d);
            long long i = c.skips, j = c.rings;
            if (j < 0) { i = -i; j = -j; }
            if (!(j >= 0 && std::llabs(i) > j)) continue;
            for (Node x = 0; x < n; ++x)
                REQUIRE_NOTHROW(colour_step2_case(g, x, j));
        }
    }
}

TEST_CASE("colouring of (7,2): conflict-free, 12 arc colours, 20 edge colours") {
    CirculantGraph g(7, 2);
    Routing rt(g);
    ColouringResult arc = colour_routing(g, rt, Variant::Arc);
    CHECK(arc.conflict_free);
    CHECK(arc.distinct_count == 12);
    ColouringResult edge = colour_routing(g, rt, Variant::Edge);
    CHECK(edge.conflict_free);
    CHECK(edge.distinct_count == 20);
    CHECK(edge.distinct_count <= 2 * arc.distinct_count);
}

TEST_CASE("colouring of (12,3) stays within the palette bound") {
    CirculantGraph g(12, 3);
    Routing rt(g);
    ColouringResult arc = colour_routing(g, rt, Variant::Arc);
    CHECK(arc.conflict_free);
    CHECK(arc.distinct_count == 24);
    CHECK(arc.distinct_count <= 34);
}

TEST_CASE("colour counts: direct sum equals the regime formula") {
    ColourCount c72 = colour_count_formula(CirculantGraph(7, 2));
    CHECK(c72.sumf == 34);
    CHECK(c72.case_formula == 34);
    CHECK(c72.regime == CountRegime::WB2);

    ColourCount c123 = colour_count_formula(CirculantGraph(12, 3));
    CHECK(c123.sumf == 34);
    CHECK(c123.regime == CountRegime::WB2);

    ColourCount c255 = colour_count_formula(CirculantGraph(25, 5));
    CHECK(c255.sumf == 116);
    CHECK(c255.regime == CountRegime::WB2);

    // odd-q members of the other two regimes
    ColourCount c102 = colour_count_formula(CirculantGraph(10, 2));
    CHECK(c102.sumf == 60);
    CHECK(c102.regime == CountRegime::WB1);
    ColourCount c3410 = colour_count_formula(CirculantGraph(34, 10));
    CHECK(c3410.sumf == 314);
    CHECK(c3410.regime == CountRegime::WB3);
    // even-q
    ColourCount c162 = colour_count_formula(CirculantGraph(16, 2));
    CHECK(c162.sumf == 94);
    CHECK(c162.regime == CountRegime::WB1);
}

TEST_CASE("count identity holds across regimes, n <= 200") {
    for (long long n = 5; n <= 200; ++n)
        for (long long s = 2; 2 * s < n; ++s)
            REQUIRE_NOTHROW(colour_count_formula(CirculantGraph(n, s)));
}

TEST_CASE("instances that wrap skip links around the ring stay conflict-free") {
    // odd q with classes |i| = ceil(q/2), 2 <= j < |i|: the hard family
    for (auto [n, s] : {std::pair<long long, long long>{26, 5}, {27, 5}, {28, 5}, {29, 5},
                        {32, 6}, {61, 8}}) {
        CirculantGraph g(n, s);
        Routing rt(g);
        REQUIRE_NOTHROW(colour_routing(g, rt, Variant::Arc));
        REQUIRE_NOTHROW(colour_routing(g, rt, Variant::Edge));
    }
    CHECK(colour_routing(CirculantGraph(26, 5), Routing(CirculantGraph(26, 5)), Variant::Arc)
              .distinct_count == 80);
}

TEST_CASE("full colouring suite over the small sweep") {
    for (long long n = 5; n <= 40; ++n) {
        for (long long s = 2; 2 * s < n; ++s) {
            VerifyResult r = verify_colouring(CirculantGraph(n, s));
            INFO("(" << n << "," << s << "): " << r.detail);
            REQUIRE(r.pass);
        }
    }
}
