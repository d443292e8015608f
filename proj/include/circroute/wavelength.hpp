#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "circroute/routing.hpp"

namespace circroute {

enum class Variant { Arc, Edge };

inline const char* to_string(Variant v) { return v == Variant::Arc ? "arc" : "edge"; }

// Integer-triple colour plus the edge-variant negation marker. The arc
// variant always carries sign = +1; the edge variant flips the sign for
// classes with anticlockwise ring steps instead of negating coordinates.
struct Colour {
    long long c1 = 0;
    long long c2 = 0;
    long long c3 = 0;
    int sign = 1;

    friend bool operator==(const Colour&, const Colour&) = default;
    std::string str() const {
        std::string s = "(" + std::to_string(c1) + "," + std::to_string(c2) + "," + std::to_string(c3) + ")";
        return sign < 0 ? "-" + s : s;
    }
};

// Signed (i,j) read off a node sequence; rejects anything that is not a run
// of skip links followed by a run of ring links.
inline PathClass path_class(const CirculantGraph& g, const OrientedPath& p) {
    if (p.nodes.size() < 2) throw DomainError("path with fewer than two nodes");
    long long skips = 0, rings = 0;
    bool in_rings = false;
    for (size_t t = 0; t + 1 < p.nodes.size(); ++t) {
        const long long step = g.sub(p.nodes[t + 1], p.nodes[t]);
        long long delta;
        if (step == 1) delta = 1;
        else if (step == g.n() - 1) delta = -1;
        else if (step == g.s()) delta = g.s();
        else if (step == g.n() - g.s()) delta = -g.s();
        else throw DomainError("nodes " + std::to_string(p.nodes[t]) + "," +
                               std::to_string(p.nodes[t + 1]) + " are not adjacent");
        const bool is_ring = (delta == 1 || delta == -1);
        if (is_ring) {
            if (rings != 0 && ((delta > 0) != (rings > 0)))
                throw DomainError("ring steps change direction");
            in_rings = true;
            rings += delta;
        } else {
            if (in_rings) throw DomainError("skip step after ring steps");
            if (skips != 0 && ((delta > 0) != (skips > 0)))
                throw DomainError("skip steps change direction");
            skips += delta / g.s();
        }
    }
    return {skips, rings};
}

// alpha = |j| / gcd(s,|j|) is the least positive integer with |j| dividing
// alpha*s; beta = s / gcd(s,|j|) satisfies alpha*s = beta*|j|.
inline std::pair<long long, long long> alpha_beta(const CirculantGraph& g, long long j) {
    if (j == 0) throw DomainError("alpha/beta undefined for j = 0");
    const long long d = std::gcd(g.s(), std::llabs(j));
    return {std::llabs(j) / d, g.s() / d};
}

// Which range of the skip-dominant colouring step source x falls in, given
// ring count j >= 0. The six ranges partition [0, n).
inline char colour_step2_case(const CirculantGraph& g, Node x, long long j) {
    const long long n = g.n(), s = g.s();
    const long long half_q = g.q() / 2;
    const long long x0 = x % s;
    if (x > n - j) return 'f';
    if (x < half_q * s && x0 <= s - j) return 'a';
    if (x < (half_q - 1) * s && x0 > s - j) return 'b';
    if ((half_q - 1) * s <= x && x < half_q * s && x0 > s - j) return 'c';
    if (half_q * s <= x && x <= n - j && x0 <= s - j) return 'd';
    if (half_q * s <= x && x <= n - j && x0 > s - j) return 'e';
    throw ConsistencyError("no colouring case matches x=" + std::to_string(x) +
                           " j=" + std::to_string(j));
}

namespace detail {

inline long long mod_pos(long long v, long long m) {
    long long r = v % m;
    return r < 0 ? r + m : r;
}

// First coordinate for a class with j > 0 and |i| <= j: blocks of j values
// selected by the parity of x_alpha = floor(x / alpha*s) and by which half of
// the ring x lies in.
inline long long colour_ring_dominant(const CirculantGraph& g, Node x, long long j) {
    const auto [alpha, beta] = alpha_beta(g, j);
    (void)beta;
    const long long x_alpha = x / (alpha * g.s());
    const long long base = mod_pos(x + x_alpha / 2, j);
    if (2 * x <= g.n()) return epsilon(x_alpha) * j + base;
    return (2 + epsilon(x_alpha)) * j + base;
}

// First coordinate for a class with |i| > j >= 0: three blocks of the range
// [0, 2|i|+j). Case (f) cycles its offsets by one slot; the verbatim
// 2|i| + (x+j-n) collides with case (c) for odd q on classes with
// |i| = ceil(q/2) (the paths wrap and share a skip arc).
inline long long colour_skip_dominant(const CirculantGraph& g, Node x, long long i, long long j) {
    const long long n = g.n(), s = g.s(), q = g.q(), r = g.r();
    const long long ai = std::llabs(i);
    const long long x0 = x % s;
    switch (colour_step2_case(g, x, j)) {
        case 'a': return mod_pos(x0 + x / s, ai);
        case 'b': return ai + mod_pos(x0 + x / s, ai);
        case 'c': return 2 * ai + x0 + j - s;
        case 'd': return ai + mod_pos(x0 + x / s + s - q - r - 1, ai);
        case 'e': return mod_pos(x0 + x / s - q - r, ai);
        case 'f': return 2 * ai + mod_pos(x + j - n + 1, j);
    }
    throw ConsistencyError("unreachable colouring case");
}

}  // namespace detail

inline Colour colour_of(const CirculantGraph& g, Node x, PathClass cls, Variant variant) {
    if (x < 0 || x >= g.n()) throw DomainError("source node out of range");
    long long i = cls.skips, j = cls.rings;
    if (i == 0 && j == 0) throw DomainError("empty path class");
    int sign = 1;
    if (j < 0) {
        // classes (i,j) and (-i,-j) never share an arc in the same direction,
        // so the arc variant reuses the reflected colour outright
        i = -i;
        j = -j;
        if (variant == Variant::Edge) sign = -1;
    }
    long long c1 = (j > 0 && std::llabs(i) <= j) ? detail::colour_ring_dominant(g, x, j)
                                                 : detail::colour_skip_dominant(g, x, i, j);
    return Colour{c1, i, j, sign};
}

struct ColouringResult {
    Variant variant = Variant::Arc;
    bool conflict_free = false;
    long long distinct_count = 0;
};

namespace detail {

// Undirected-edge id (ring edges first, then skip edges) or directed-arc id.
inline long long place_of(const Arc& a, long long n, Variant variant) {
    if (variant == Variant::Arc) return static_cast<long long>(a.cls) * n + a.tail;
    switch (a.cls) {
        case ArcClass::RingCW: return a.tail;
        case ArcClass::RingACW: return a.head;
        case ArcClass::SkipCW: return n + a.tail;
        default: return n + a.head;
    }
}

}  // namespace detail

// Colour all n(n-1) paths of the routing and exhaustively verify that no two
// paths sharing a directed arc (arc variant) or an undirected edge (edge
// variant) received the same colour. Conflicts are bugs and throw.
inline ColouringResult colour_routing(const CirculantGraph& g, const Routing& rt, Variant variant) {
    const long long n = g.n();
    const long long cq = (g.q() + 1) / 2, fs = g.s() / 2;
    const long long k2 = 2 * cq + 1, k3 = 2 * fs + 1;

    long long incidences = 0;
    for (long long d = 1; d <= n - 1; ++d) {
        PathClass c = rt.class_for_difference(d);
        incidences += (std::llabs(c.skips) + std::llabs(c.rings)) * n;
    }
    if (incidences > 120'000'000)
        throw DomainError("conflict check needs " + std::to_string(incidences) +
                          " path-link incidences; instance too large for exhaustive colouring");

    // injective packing of (c1, c2, c3, sign); c2, c3 lie in the class
    // rectangle so only c1 is open-ended
    auto raw_id = [&](const Colour& c) {
        return ((c.c1 * k2 + (c.c2 + cq)) * k3 + (c.c3 + fs)) * 2 + (c.sign < 0 ? 1 : 0);
    };

    // pass 1: dense colour id per path
    std::unordered_map<long long, int> dense;
    std::vector<int> cid_of(static_cast<size_t>(n) * static_cast<size_t>(n - 1));
    for (long long d = 1; d <= n - 1; ++d) {
        const PathClass cls = rt.class_for_difference(d);
        for (Node x = 0; x < n; ++x) {
            const long long raw = raw_id(colour_of(g, x, cls, variant));
            auto [it, fresh] = dense.try_emplace(raw, static_cast<int>(dense.size()));
            (void)fresh;
            cid_of[static_cast<size_t>((d - 1) * n + x)] = it->second;
        }
    }
    const long long palette_size = static_cast<long long>(dense.size());

    // pass 2: one key per path-link incidence; equal keys = conflict
    std::vector<unsigned long long> table;
    table.reserve(static_cast<size_t>(incidences));
    for (long long d = 1; d <= n - 1; ++d) {
        const PathClass cls = rt.class_for_difference(d);
        for (Node x = 0; x < n; ++x) {
            const auto cid =
                static_cast<unsigned long long>(cid_of[static_cast<size_t>((d - 1) * n + x)]);
            for_each_arc(g, x, cls, [&](const Arc& a) {
                table.push_back(static_cast<unsigned long long>(detail::place_of(a, n, variant)) *
                                    static_cast<unsigned long long>(palette_size) +
                                cid);
            });
        }
    }
    std::sort(table.begin(), table.end());
    const auto dup = std::adjacent_find(table.begin(), table.end());
    if (dup != table.end()) {
        const long long place = static_cast<long long>(*dup / static_cast<unsigned long long>(palette_size));
        const int cid = static_cast<int>(*dup % static_cast<unsigned long long>(palette_size));
        std::string who;
        for (long long d = 1; d <= n - 1 && who.size() < 60; ++d) {
            const PathClass cls = rt.class_for_difference(d);
            for (Node x = 0; x < n; ++x) {
                if (cid_of[static_cast<size_t>((d - 1) * n + x)] != cid) continue;
                bool hits = false;
                for_each_arc(g, x, cls, [&](const Arc& a) {
                    hits = hits || detail::place_of(a, n, variant) == place;
                });
                if (hits)
                    who += " (" + std::to_string(x) + "->" + std::to_string(g.add(x, d)) + ")";
            }
        }
        throw ConsistencyError(std::string(to_string(variant)) + "-colouring conflict on " +
                               (variant == Variant::Arc ? "arc" : "edge") + " id " +
                               std::to_string(place) + "; clashing paths:" + who);
    }
    return ColouringResult{variant, true, palette_size};
}

enum class CountRegime { WB1, WB2, WB3 };

inline const char* to_string(CountRegime r) {
    switch (r) {
        case CountRegime::WB1: return "wb1";
        case CountRegime::WB2: return "wb2";
        case CountRegime::WB3: return "wb3";
    }
    return "?";
}

struct ColourCount {
    long long sumf = 0;          // direct palette-size sum over the class rectangle
    long long case_formula = 0;  // closed form of the matching regime
    CountRegime regime = CountRegime::WB1;
};

// Palette size of the colouring over the class rectangle |i| <= ceil(q/2),
// |j| <= floor(s/2): 4j colours per class with j >= |i|, 2|i|+j per class
// with |i| > j >= 0, nothing new for j < 0. The regime closed forms are
// exact, so sumf must equal the selected formula.
inline ColourCount colour_count_formula(const CirculantGraph& g) {
    const long long q = g.q(), s = g.s();
    const long long cq = (q + 1) / 2, fs = s / 2;
    const long long g1 = std::min(fs, cq), g2 = std::min(fs + 1, cq);

    long long sumf = 0;
    for (long long j = 1; j <= g1; ++j) sumf += (2 * j + 1) * 4 * j;
    for (long long j = g1 + 1; j <= fs; ++j) sumf += (2 * cq + 1) * 4 * j;
    for (long long i = 1; i <= g2; ++i)
        for (long long j = 0; j < i; ++j) sumf += 4 * i + 2 * j;
    for (long long i = g2 + 1; i <= cq; ++i)
        for (long long j = 0; j <= fs; ++j) sumf += 4 * i + 2 * j;

    const long long eq = epsilon(q);
    const Rational m(fs), m2(fs + 1);  // m2 = floor((s+2)/2)
    CountRegime regime;
    Rational formula;
    if (fs <= cq - 2) {
        regime = CountRegime::WB1;
        formula = Rational(1, 6) * m2 * (Rational(3 * q * q + 6 * q) + Rational(3 * q + 10) * m +
                                         Rational(8) * m * m) +
                  Rational(eq, 2) * m2 * (m + Rational(2 * q + 3));
    } else if (fs <= cq) {
        regime = CountRegime::WB2;
        formula = Rational(5 * q * q * q + 12 * q * q + 4 * q, 24) +
                  Rational(2, 3) * m * m2 * (Rational(4) * m + Rational(5)) +
                  Rational(eq) * Rational(5 * q * q + 13 * q + 7, 8);
    } else {
        regime = CountRegime::WB3;
        formula = Rational(q * q * q + 12 * q * q + 20 * q, 24) + Rational(2 * q + 2) * m * m2 +
                  Rational(eq) * (Rational(q * q + 9 * q + 11, 8) + Rational(2) * m2 * m);
    }
    const long long cf = formula.as_integer();
    if (cf != sumf)
        throw ConsistencyError("colour count mismatch: sum " + std::to_string(sumf) +
                               " != regime formula " + std::to_string(cf));
    return ColourCount{sumf, cf, regime};
}

}  // namespace circroute
