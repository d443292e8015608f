#pragma once

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

#include "circroute/graph.hpp"

namespace circroute {

inline int epsilon(long long x) { return static_cast<int>(std::llabs(x) % 2); }

// Signed step-class of a path: `skips` clockwise skip links then `rings`
// clockwise ring links (negative = anticlockwise).
struct PathClass {
    long long skips = 0;
    long long rings = 0;
    friend bool operator==(const PathClass&, const PathClass&) = default;
};

// Class of the base path P_{0,d}. For d <= floor(n/2), write d = i*s + j with
// 0 <= j < s: ties j == floor(s/2) stay on the clockwise-ring branch. Larger d
// are point reflections of P_{0,n-d}.
inline PathClass base_class(const CirculantGraph& g, long long d) {
    const long long n = g.n(), s = g.s();
    if (d < 1 || d > n - 1)
        throw DomainError("path difference d out of range [1, n-1] (d=" + std::to_string(d) + ")");
    if (d <= n / 2) {
        const long long i = d / s, j = d % s;
        if (j <= s / 2) return {i, j};
        return {i + 1, j - s};
    }
    PathClass c = base_class(g, n - d);
    return {-c.skips, -c.rings};
}

// A concrete path: node sequence plus its step class.
struct OrientedPath {
    std::vector<Node> nodes;
    PathClass cls;

    Node source() const { return nodes.front(); }
    Node destination() const { return nodes.back(); }
};

// Visit the directed arcs of the path that starts at `source` and realizes
// class `cls`, without materializing nodes.
template <class F>
inline void for_each_arc(const CirculantGraph& g, Node source, PathClass cls, F&& f) {
    Node cur = source;
    const long long skip = cls.skips >= 0 ? g.s() : -g.s();
    const ArcClass skip_cls = cls.skips >= 0 ? ArcClass::SkipCW : ArcClass::SkipACW;
    for (long long t = 0; t < std::llabs(cls.skips); ++t) {
        Node next = g.add(cur, skip);
        f(Arc{cur, next, skip_cls});
        cur = next;
    }
    const long long ring = cls.rings >= 0 ? 1 : -1;
    const ArcClass ring_cls = cls.rings >= 0 ? ArcClass::RingCW : ArcClass::RingACW;
    for (long long t = 0; t < std::llabs(cls.rings); ++t) {
        Node next = g.add(cur, ring);
        f(Arc{cur, next, ring_cls});
        cur = next;
    }
}

inline OrientedPath walk_path(const CirculantGraph& g, Node source, PathClass cls) {
    OrientedPath p;
    p.cls = cls;
    p.nodes.reserve(static_cast<size_t>(std::llabs(cls.skips) + std::llabs(cls.rings) + 1));
    p.nodes.push_back(source);
    for_each_arc(g, source, cls, [&](const Arc& a) { p.nodes.push_back(a.head); });
    return p;
}

inline OrientedPath base_path(const CirculantGraph& g, long long d) {
    return walk_path(g, 0, base_class(g, d));
}

// The all-to-all routing R of the skip-then-ring construction. Paths are
// stored implicitly as classes per difference d and expanded on demand; the
// path for (x,y) is the translation of P_{0, y-x} by x.
class Routing {
public:
    explicit Routing(const CirculantGraph& g) : g_(g) {
        classes_.reserve(static_cast<size_t>(g.n() - 1));
        for (long long d = 1; d <= g.n() - 1; ++d) classes_.push_back(base_class(g, d));
    }

    const CirculantGraph& graph() const { return g_; }
    long long path_count() const { return g_.n() * (g_.n() - 1); }

    PathClass class_for_difference(long long d) const {
        if (d < 1 || d > g_.n() - 1) throw DomainError("difference out of range");
        return classes_[static_cast<size_t>(d - 1)];
    }
    PathClass class_of(Node x, Node y) const {
        if (x == y) throw DomainError("no path for x == y");
        return class_for_difference(g_.sub(y, x));
    }
    OrientedPath path(Node x, Node y) const { return walk_path(g_, x, class_of(x, y)); }

private:
    CirculantGraph g_;
    std::vector<PathClass> classes_;
};

inline Routing build_routing(const CirculantGraph& g) { return Routing(g); }

// Per-class loads of R. All arcs of one class carry the same load, so the
// profile is four numbers.
struct LoadProfile {
    long long ring_cw = 0;
    long long ring_acw = 0;
    long long skip_cw = 0;
    long long skip_acw = 0;

    long long max_arc_load() const {
        return std::max(std::max(ring_cw, ring_acw), std::max(skip_cw, skip_acw));
    }
    long long max_edge_load() const { return std::max(ring_cw + ring_acw, skip_cw + skip_acw); }
};

// Totals over the base paths P_{0,d}; by translation symmetry these equal the
// uniform per-arc loads.
inline LoadProfile class_load_totals(const CirculantGraph& g) {
    LoadProfile lp;
    for (long long d = 1; d <= g.n() - 1; ++d) {
        PathClass c = base_class(g, d);
        (c.skips >= 0 ? lp.skip_cw : lp.skip_acw) += std::llabs(c.skips);
        (c.rings >= 0 ? lp.ring_cw : lp.ring_acw) += std::llabs(c.rings);
    }
    return lp;
}

// Per-arc load arrays indexed by arc tail, filled by walking every one of the
// n(n-1) paths.
struct PerArcLoads {
    std::vector<long long> ring_cw, ring_acw, skip_cw, skip_acw;
};

inline PerArcLoads brute_force_arc_loads(const CirculantGraph& g) {
    const auto size = static_cast<size_t>(g.n());
    PerArcLoads loads{std::vector<long long>(size, 0), std::vector<long long>(size, 0),
                      std::vector<long long>(size, 0), std::vector<long long>(size, 0)};
    std::vector<PathClass> classes;
    classes.reserve(size - 1);
    for (long long d = 1; d <= g.n() - 1; ++d) classes.push_back(base_class(g, d));
    for (Node x = 0; x < g.n(); ++x) {
        for (const PathClass& c : classes) {
            for_each_arc(g, x, c, [&](const Arc& a) {
                switch (a.cls) {
                    case ArcClass::RingCW: ++loads.ring_cw[static_cast<size_t>(a.tail)]; break;
                    case ArcClass::RingACW: ++loads.ring_acw[static_cast<size_t>(a.tail)]; break;
                    case ArcClass::SkipCW: ++loads.skip_cw[static_cast<size_t>(a.tail)]; break;
                    case ArcClass::SkipACW: ++loads.skip_acw[static_cast<size_t>(a.tail)]; break;
                }
            });
        }
    }
    return loads;
}

enum class Uniformity { Auto, Check, Skip };

// Loads of the routing. With Uniformity::Check (or Auto at n <= 200) the
// per-class counts are re-derived by brute force over all n(n-1) paths and
// each class is asserted uniform across its n arcs.
inline LoadProfile load_profile(const Routing& rt, Uniformity mode = Uniformity::Auto) {
    const CirculantGraph& g = rt.graph();
    LoadProfile lp = class_load_totals(g);
    const bool check = mode == Uniformity::Check || (mode == Uniformity::Auto && g.n() <= 200);
    if (check) {
        PerArcLoads arr = brute_force_arc_loads(g);
        auto verify = [&](const std::vector<long long>& v, long long expect, const char* name) {
            for (size_t t = 0; t < v.size(); ++t) {
                if (v[t] != expect)
                    throw ConsistencyError(std::string("non-uniform ") + name + " load at arc tail " +
                                           std::to_string(t) + ": " + std::to_string(v[t]) +
                                           " != " + std::to_string(expect));
            }
        };
        verify(arr.ring_cw, lp.ring_cw, "ring_cw");
        verify(arr.ring_acw, lp.ring_acw, "ring_acw");
        verify(arr.skip_cw, lp.skip_cw, "skip_cw");
        verify(arr.skip_acw, lp.skip_acw, "skip_acw");
    }
    return lp;
}

// Delta correction used by the odd-q maximum ring load.
inline Rational delta_term(const CirculantGraph& g) {
    const long long s = g.s(), r = g.r();
    if (s % 2 == 0)
        return Rational(s, 4) + Rational(1, 2) * Rational(r / 2) * Rational(s - (r + 2) / 2);
    return Rational(1, 2) * Rational((r + 1) / 2) * Rational(s - (r + 1) / 2);
}

// The two closed-form candidates for the maximum arc load of R: the ring-link
// count and the skip-link count singled out by the parity of q. Each must
// reduce to an integer.
inline std::pair<Rational, Rational> lemma7_terms(const CirculantGraph& g) {
    const long long s = g.s(), q = g.q(), r = g.r();
    const Rational half_sq(s * s / 2);
    if (q % 2 == 0) {
        Rational rings = Rational(q, 4) * half_sq + Rational(1, 2) * Rational(r / 2) * Rational((r + 2) / 2);
        Rational skips = Rational(q * q * s, 8) + Rational(q, 2) * (Rational(r / 2) + Rational(epsilon(s), 2));
        return {rings, skips};
    }
    Rational rings = Rational(q, 4) * half_sq + delta_term(g);
    Rational skips = Rational((q * q - 1) * s, 8) + Rational(q + 1, 2) * Rational((r + epsilon(s)) / 2);
    return {rings, skips};
}

inline long long lemma7_formula(const CirculantGraph& g) {
    auto [rings, skips] = lemma7_terms(g);
    return std::max(rings.as_integer(), skips.as_integer());
}

enum class Lemma8Case { A, B, C, D, E, Gap };

inline const char* to_string(Lemma8Case c) {
    switch (c) {
        case Lemma8Case::A: return "a";
        case Lemma8Case::B: return "b";
        case Lemma8Case::C: return "c";
        case Lemma8Case::D: return "d";
        case Lemma8Case::E: return "e";
        case Lemma8Case::Gap: return "gap";
    }
    return "?";
}

struct Lemma8Bound {
    Lemma8Case c;
    Rational value;
};

// Case-resolved upper bound on the max arc load of R. Square-root thresholds
// are decided by integer comparisons; the square case q = s = sqrt(n) is an
// exact value and wins when case (e) also applies. In the gap (s between
// sqrt(n-1) and sqrt(n)+-1 with q of the wrong parity) no case is claimed and
// the exact Lemma-7 value is reported instead.
inline Lemma8Bound lemma8_upper_bound(const CirculantGraph& g) {
    const long long n = g.n(), s = g.s(), q = g.q(), r = g.r();
    const long long es = epsilon(s);
    if (s * s == n && q == s) return {Lemma8Case::C, Rational(s * (n - es), 8)};
    if (q % 2 == 0) {
        if (s * s <= n - 1) return {Lemma8Case::A, Rational(q * (n + r + 2 * es), 8)};
        if ((s - 1) * (s - 1) >= n) return {Lemma8Case::D, Rational(s * n + r - es * q, 8)};
    } else {
        if ((s + 1) * (s + 1) <= n) return {Lemma8Case::B, Rational(q * (n + r + 2 * es) + s, 8)};
        if (s * s >= n) return {Lemma8Case::E, Rational(s * (n + r + 2) - es * q, 8)};
    }
    return {Lemma8Case::Gap, Rational(lemma7_formula(g))};
}

}  // namespace circroute
