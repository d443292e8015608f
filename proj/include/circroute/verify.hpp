#pragma once

#include <sstream>
#include <string>

#include "circroute/bounds.hpp"
#include "circroute/lattice.hpp"
#include "circroute/wavelength.hpp"

namespace circroute {

struct VerifyResult {
    bool pass = true;
    std::string detail;  // first counterexample on failure, notes otherwise

    static VerifyResult ok(std::string note = "") { return {true, std::move(note)}; }
    static VerifyResult fail(std::string why) { return {false, std::move(why)}; }
};

// Construction-1 invariants: well-formed base paths, class rectangle, load
// uniformity, the Lemma-7 equality, the Lemma-8 dominance, translation
// symmetry, odd-n reflection pairing.
inline VerifyResult verify_routing(const CirculantGraph& g) {
    const long long n = g.n(), s = g.s();
    const long long cq = (g.q() + 1) / 2, fs = s / 2;
    for (long long d = 1; d <= n - 1; ++d) {
        OrientedPath p = base_path(g, d);
        if (p.nodes.front() != 0 || p.nodes.back() != d)
            return VerifyResult::fail("base path for d=" + std::to_string(d) +
                                      " does not run 0 -> d");
        std::vector<char> seen(static_cast<size_t>(n), 0);
        for (Node v : p.nodes) {
            if (seen[static_cast<size_t>(v)]++)
                return VerifyResult::fail("base path for d=" + std::to_string(d) +
                                          " repeats node " + std::to_string(v));
        }
        PathClass derived = path_class(g, p);  // throws if not skips-then-rings
        if (!(derived == p.cls))
            return VerifyResult::fail("class mismatch on base path d=" + std::to_string(d));
        const long long dd = d <= n / 2 ? d : d - n;
        if (std::llabs(p.cls.skips) > cq || std::llabs(p.cls.rings) > fs ||
            p.cls.skips * s + p.cls.rings != dd)
            return VerifyResult::fail("class out of rectangle at d=" + std::to_string(d));
    }

    Routing rt(g);
    LoadProfile lp;
    try {
        lp = load_profile(rt, Uniformity::Check);
    } catch (const ConsistencyError& e) {
        return VerifyResult::fail(e.what());
    }
    if (lp.max_arc_load() != lemma7_formula(g))
        return VerifyResult::fail("max arc load " + std::to_string(lp.max_arc_load()) +
                                  " != lemma7 " + std::to_string(lemma7_formula(g)));
    Lemma8Bound l8 = lemma8_upper_bound(g);
    if (l8.c == Lemma8Case::C && l8.value != Rational(lp.max_arc_load()))
        return VerifyResult::fail("lemma8 case c is not an equality");
    if (l8.value < Rational(lp.max_arc_load()))
        return VerifyResult::fail("lemma8 bound below achieved load");
    if (n % 2 == 1 && (lp.ring_cw != lp.ring_acw || lp.skip_cw != lp.skip_acw))
        return VerifyResult::fail("odd n but loads are not reflection-paired");

    for (Node x : {Node(0), Node(1), n / 2}) {
        for (long long d : {1LL, n / 3 + 1, n - 1}) {
            const Node y = g.add(x, d);
            OrientedPath base = rt.path(0, g.mod(d)), moved = rt.path(x, y);
            for (size_t t = 0; t < base.nodes.size(); ++t) {
                if (moved.nodes[t] != g.add(base.nodes[t], x))
                    return VerifyResult::fail("translation symmetry broken at (x,d)=(" +
                                              std::to_string(x) + "," + std::to_string(d) + ")");
            }
        }
    }
    return VerifyResult::ok();
}

// Lattice invariants: packedness, the n-point bijection of the half-open
// parallelogram, corner distance == BFS distance, and the two distance-sum
// bounds.
inline VerifyResult verify_lattice(const CirculantGraph& g) {
    const long long sigma = distance_sum_from_zero(g);
    if (auto lb = distance_sum_lower_bound(g); lb && sigma < *lb)
        return VerifyResult::fail("distance sum " + std::to_string(sigma) + " below bound " +
                                  std::to_string(*lb));
    if (auto exact = sqrt_case_distance_sum(g); exact && sigma != *exact)
        return VerifyResult::fail("square-case distance sum mismatch");

    auto basis = packed_basis(g);
    if (!basis) return VerifyResult::ok("packed basis: NotApplicable, skipped corner-distance");
    if (!is_packed(basis->a, basis->b))
        return VerifyResult::fail("returned basis violates packedness inequality");
    if (label(g, basis->a) != 0 || label(g, basis->b) != 0)
        return VerifyResult::fail("basis vector has nonzero label");
    try {
        ParallelogramIndex index(g, *basis);  // asserts the bijection
        const auto dist = distances_from(g, 0);
        for (Node t = 0; t < g.n(); ++t) {
            if (index.corner_distance(t) != dist[static_cast<size_t>(t)])
                return VerifyResult::fail("corner distance != BFS at target " + std::to_string(t) +
                                          " (" + std::to_string(index.corner_distance(t)) + " vs " +
                                          std::to_string(dist[static_cast<size_t>(t)]) + ")");
        }
    } catch (const ConsistencyError& e) {
        return VerifyResult::fail(e.what());
    }
    return VerifyResult::ok();
}

// Construction-2 invariants: conflict-freeness of both variants, palette
// ranges per class, the palette-count identity, and count relations.
inline VerifyResult verify_colouring(const CirculantGraph& g) {
    Routing rt(g);
    ColouringResult arc, edge;
    try {
        arc = colour_routing(g, rt, Variant::Arc);
        edge = colour_routing(g, rt, Variant::Edge);
    } catch (const ConsistencyError& e) {
        return VerifyResult::fail(e.what());
    }
    ColourCount count = colour_count_formula(g);  // throws on identity failure
    if (arc.distinct_count > count.sumf)
        return VerifyResult::fail("distinct arc colours exceed palette-size formula");
    if (edge.distinct_count > 2 * arc.distinct_count)
        return VerifyResult::fail("edge palette exceeds twice the arc palette");
    if (arc.distinct_count < class_load_totals(g).max_arc_load())
        return VerifyResult::fail("fewer colours than the max arc load");

    for (long long d = 1; d <= g.n() - 1; ++d) {
        const PathClass cls = rt.class_for_difference(d);
        const long long ai = std::llabs(cls.skips), aj = std::llabs(cls.rings);
        const long long limit = aj >= ai ? 4 * aj : 2 * ai + aj;
        for (Node x = 0; x < g.n(); ++x) {
            Colour c = colour_of(g, x, cls, Variant::Arc);
            if (c.c1 < 0 || c.c1 >= limit)
                return VerifyResult::fail("colour first coordinate out of range for class (" +
                                          std::to_string(cls.skips) + "," +
                                          std::to_string(cls.rings) + ") at x=" + std::to_string(x));
            if (c.c2 != (cls.rings < 0 ? -cls.skips : cls.skips) ||
                c.c3 != (cls.rings < 0 ? -cls.rings : cls.rings))
                return VerifyResult::fail("colour class coordinates mismatch");
        }
    }
    return VerifyResult::ok();
}

// Cross-module checks: graph basics, the witnessed bound chain, and the
// bracket coherence of both theorems.
inline VerifyResult verify_bounds_chain(const CirculantGraph& g) {
    if (cut_size_halfline(g) != 2 * g.s() + 2)
        return VerifyResult::fail("half-line cut size != 2s+2");

    const long long sigma = distance_sum_from_zero(g);
    const Rational half(sigma, 2);
    if (auto t2 = lower_theorem2(g); t2 && *t2 > half)
        return VerifyResult::fail("Theorem 2 bound above the exact distance-sum bound");
    if (auto l9 = lower_lemma9(g); l9 && *l9 != half)
        return VerifyResult::fail("Lemma 9 bound is not tight at the distance-sum level");
    if (lower_mean_distance(g).value > half.to_double() + 1e-9)
        return VerifyResult::fail("mean-distance bound above the exact distance-sum bound");

    const LoadProfile lp = class_load_totals(g);
    const Rational max_edge(lp.max_edge_load());
    if (half > max_edge) return VerifyResult::fail("distance-sum bound above max edge load");
    if (lower_cut(g) > max_edge) return VerifyResult::fail("cut bound above max edge load");

    if (auto up = theorem1_upper(g); up && Rational(lp.max_arc_load()) > *up)
        return VerifyResult::fail("max arc load above the Theorem 1 upper bound");
    Lemma8Bound l8 = lemma8_upper_bound(g);
    if (Rational(lp.max_arc_load()) > l8.value)
        return VerifyResult::fail("max arc load above the Lemma 8 bound");

    BracketInputs in;
    in.distance_sum = sigma;
    in.max_arc_load = lp.max_arc_load();
    in.max_edge_load = lp.max_edge_load();
    in.sumf = colour_count_formula(g).sumf;
    for (const BracketPair& pair : {theorem1_bracket(g, in), theorem4_bracket(g, in)}) {
        for (const BoundReport* r : {&pair.arc, &pair.edge}) {
            if (r->lower.approx > r->upper.approx * (1.0 + 1e-12))
                return VerifyResult::fail(r->target + " bracket has lower > upper");
        }
    }
    return VerifyResult::ok();
}

inline VerifyResult verify_all(const CirculantGraph& g) {
    std::ostringstream notes;
    for (auto [name, fn] : std::initializer_list<
             std::pair<const char*, VerifyResult (*)(const CirculantGraph&)>>{
             {"routing", verify_routing},
             {"lattice", verify_lattice},
             {"colouring", verify_colouring},
             {"bounds", verify_bounds_chain}}) {
        VerifyResult r = fn(g);
        if (!r.pass) return VerifyResult::fail(std::string(name) + ": " + r.detail);
        if (!r.detail.empty()) notes << name << ": " << r.detail << "; ";
    }
    return VerifyResult::ok(notes.str());
}

}  // namespace circroute
