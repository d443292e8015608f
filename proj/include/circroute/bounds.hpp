#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "circroute/graph.hpp"
#include "circroute/routing.hpp"

namespace circroute {

// kappa(a) = a + (eps(s) + eps(q))/2; parametrizes the Theorem-4 thresholds.
inline Rational kappa(const CirculantGraph& g, long long a) {
    return Rational(a) + Rational(epsilon(g.s()) + epsilon(g.q()), 2);
}

// Crossover value: the cut bound dominates the mean-distance bound exactly
// for s <= delta(n). Irrational, evaluated in floating point; diagnostics
// only, never used for case selection.
inline double delta_threshold(long long n) {
    if (n <= 24)
        throw DomainError("delta threshold undefined: (sqrt(2n)-7)^3 <= 0 for n <= 24 (n=" +
                          std::to_string(n) + ")");
    const double c = std::sqrt(2.0 * static_cast<double>(n)) - 7.0;
    return 3.0 * static_cast<double>(n) * static_cast<double>(n * n - epsilon(n)) /
               (static_cast<double>(n - 1) * c * c * c) -
           1.0;
}

// Cut bound: pi >= floor(n/2)ceil(n/2)/(s+1) = (n^2 - eps(n))/(4(s+1)).
inline Rational lower_cut(const CirculantGraph& g) {
    return Rational(g.n() * g.n() - epsilon(g.n()), 4 * (g.s() + 1));
}

// Mean-distance bound (n-1)(sqrt(2n)-7)^3 / 12n; negative for n < 25 and
// clamped at zero for ranking, with the raw value kept for reporting.
struct MeanDistanceBound {
    double raw = 0.0;
    double value = 0.0;  // max(raw, 0)
};

inline MeanDistanceBound lower_mean_distance(const CirculantGraph& g) {
    const double n = static_cast<double>(g.n());
    const double c = std::sqrt(2.0 * n) - 7.0;
    const double raw = (n - 1.0) * c * c * c / (12.0 * n);
    return {raw, raw > 0.0 ? raw : 0.0};
}

// pi >= sum of all pairwise distances / |E| = n*Sigma/(2n) = Sigma/2, with
// Sigma the BFS distance sum from node 0. The strongest generic lower bound
// at desk scale.
inline Rational lower_distance_sum_exact(const CirculantGraph& g) {
    return Rational(distance_sum_from_zero(g), 2);
}

inline Rational distance_sum_half(long long sigma) { return Rational(sigma, 2); }

// pi >= floor((s+1)^2/2)/2 when r <= q or r + q >= s + 1.
inline std::optional<Rational> lower_theorem2(const CirculantGraph& g) {
    if (g.r() <= g.q() || g.r() + g.q() >= g.s() + 1)
        return Rational((g.s() + 1) * (g.s() + 1) / 2, 2);
    return std::nullopt;
}

// pi >= sqrt(n)(n-1)/4 in the square case s = q = sqrt(n).
inline std::optional<Rational> lower_lemma9(const CirculantGraph& g) {
    if (g.s() * g.s() == g.n() && g.q() == g.s())
        return Rational(g.s() * (g.n() - 1), 4);
    return std::nullopt;
}

enum class Theorem1Case { A, B, C, NoCase };

inline const char* to_string(Theorem1Case c) {
    switch (c) {
        case Theorem1Case::A: return "a";
        case Theorem1Case::B: return "b";
        case Theorem1Case::C: return "c";
        case Theorem1Case::NoCase: return "none";
    }
    return "?";
}

// s <= sqrt(n)-1, s = sqrt(n), s >= sqrt(n)+1, decided by integer squares.
inline Theorem1Case theorem1_case(const CirculantGraph& g) {
    const long long n = g.n(), s = g.s();
    if ((s + 1) * (s + 1) <= n) return Theorem1Case::A;
    if (s * s == n) return Theorem1Case::B;
    if ((s - 1) * (s - 1) >= n) return Theorem1Case::C;
    return Theorem1Case::NoCase;
}

// Case closed form bounding the arc-forwarding index from above.
inline std::optional<Rational> theorem1_upper(const CirculantGraph& g) {
    const long long n = g.n(), s = g.s(), r = g.r();
    switch (theorem1_case(g)) {
        case Theorem1Case::A: return Rational((n - r) * (n + r + 2) + s * s, 8 * s);
        case Theorem1Case::B: return Rational(s * (n - epsilon(s)), 8);
        case Theorem1Case::C: return Rational(s * s * (n + r + 2) - epsilon(s) * (n - r), 8 * s);
        case Theorem1Case::NoCase: return std::nullopt;
    }
    return std::nullopt;
}

enum class Theorem4Case { A, B, C, NoCase };

inline const char* to_string(Theorem4Case c) {
    switch (c) {
        case Theorem4Case::A: return "a";
        case Theorem4Case::B: return "b";
        case Theorem4Case::C: return "c";
        case Theorem4Case::NoCase: return "none";
    }
    return "?";
}

namespace detail {
// s <= sqrt(n - r + kappa^2) + kappa, exactly over rationals.
inline bool below_threshold(const CirculantGraph& g, long long a) {
    const Rational k = kappa(g, a);
    const Rational u = Rational(g.s()) - k;
    if (u <= Rational(0)) return true;
    return u * u <= Rational(g.n() - g.r()) + k * k;
}
inline bool above_threshold(const CirculantGraph& g, long long a) {
    const Rational k = kappa(g, a);
    const Rational u = Rational(g.s()) - k;
    if (u < Rational(0)) return false;
    return u * u >= Rational(g.n() - g.r()) + k * k;
}
}  // namespace detail

inline Theorem4Case theorem4_case(const CirculantGraph& g) {
    if (detail::below_threshold(g, -2)) return Theorem4Case::A;
    if (detail::above_threshold(g, -1) && detail::below_threshold(g, 0)) return Theorem4Case::B;
    if (detail::above_threshold(g, 1)) return Theorem4Case::C;
    return Theorem4Case::NoCase;
}

// Case closed form bounding the directed optical index from above. The case-a
// odd-q correction follows the colour count it is relaxed from (the printed
// form drops below the construction's own palette for odd q).
inline std::optional<Rational> theorem4_upper(const CirculantGraph& g) {
    const long long s = g.s(), q = g.q();
    const long long eq = epsilon(q);
    switch (theorem4_case(g)) {
        case Theorem4Case::A:
            return Rational(s + 2, 24) *
                   Rational(6 * q * q + 3 * q * (s + 4) + s * (4 * s + 10) + eq * 3 * (s + 4 * q + 6));
        case Theorem4Case::B:
            return Rational(q * (q + 2) * (5 * q + 2), 24) + Rational(s * (s + 2) * (2 * s + 5), 6) +
                   Rational(eq) * Rational(5 * q * q + 13 * q + 7, 8);
        case Theorem4Case::C:
            return Rational(q * (q + 2) * (q + 10), 24) + Rational(s * (s + 2) * (q + 1), 2) +
                   Rational(eq) * Rational((q + 5) * (q + 5) + 4 * (s + 1) * (s + 1), 8);
        case Theorem4Case::NoCase: return std::nullopt;
    }
    return std::nullopt;
}

// A bound value with provenance; `exact` is absent only for the irrational
// mean-distance bound.
struct BoundValue {
    std::optional<Rational> exact;
    double approx = 0.0;
    std::string provenance;

    static BoundValue of(Rational v, std::string prov) {
        return {v, v.to_double(), std::move(prov)};
    }
    static BoundValue of_real(double v, std::string prov) { return {std::nullopt, v, std::move(prov)}; }

    BoundValue halved() const {
        if (exact) return of(*exact / Rational(2), provenance);
        return of_real(approx / 2.0, provenance);
    }
    BoundValue doubled() const {
        if (exact) return of(*exact * Rational(2), provenance);
        return of_real(approx * 2.0, provenance);
    }
};

// Values the bracket assembly may use; absent fields were not computed
// (e.g. above the exhaustive ceiling).
struct BracketInputs {
    std::optional<long long> distance_sum;         // BFS Sigma
    std::optional<long long> max_arc_load;         // constructive, = lemma7
    std::optional<long long> max_edge_load;        // constructive
    std::optional<long long> arc_colours;          // distinct colours, arc variant
    std::optional<long long> edge_colours;         // distinct colours, edge variant
    std::optional<long long> sumf;                 // palette-size formula
};

// Best lower bound on the edge-forwarding index. Exact candidates are ranked
// exactly; the floating mean-distance bound wins only when it beats every
// exact candidate (possible only beyond desk scale, spec'd as diagnostics).
inline BoundValue best_edge_lower(const CirculantGraph& g, const BracketInputs& in) {
    BoundValue best = BoundValue::of(lower_cut(g), "cut (Lemma 1)");
    auto consider = [&](const std::optional<Rational>& v, const char* prov) {
        if (v && (!best.exact || *v > *best.exact)) best = BoundValue::of(*v, prov);
    };
    consider(lower_lemma9(g), "distance-sum, square case (Lemma 9)");
    if (in.distance_sum) {
        Rational half = distance_sum_half(*in.distance_sum);
        if (!best.exact || half > *best.exact) {
            // prefer the closed form on ties (Lemma 9 equals Sigma/2 when it applies)
            best = BoundValue::of(half, "distance-sum (exact)");
        }
    }
    consider(lower_theorem2(g), "distance-sum bound (Theorem 2)");
    const double md = lower_mean_distance(g).value;
    if (md > best.approx * (1.0 + 1e-9) && (!best.exact || md > best.exact->to_double()))
        best = BoundValue::of_real(md, "mean-distance (Lemma 2)");
    return best;
}

struct BoundReport {
    std::string target;
    std::string case_tag;
    BoundValue lower;
    BoundValue upper;
    std::optional<long long> achieved;
    std::optional<double> ratio;  // upper/lower when lower > 0
    bool tight = false;
};

struct BracketPair {
    BoundReport arc;
    BoundReport edge;
};

namespace detail {
inline void finish(BoundReport& r) {
    if (r.lower.approx > 0.0) r.ratio = r.upper.approx / r.lower.approx;
    r.tight = r.lower.exact && r.upper.exact && *r.lower.exact == *r.upper.exact;
}
}  // namespace detail

// Bracket for the arc-forwarding index (and the derived edge bracket).
// Lower: best known edge lower bound, halved for the arc target. Upper: the
// Theorem-1 case closed form, falling back to the constructive routing value
// (Lemma 8 / Lemma 7) when no case applies.
inline BracketPair theorem1_bracket(const CirculantGraph& g, const BracketInputs& in) {
    BracketPair out;
    const BoundValue edge_lower = best_edge_lower(g, in);

    out.arc.target = "pi_arc";
    out.arc.case_tag = to_string(theorem1_case(g));
    out.arc.lower = edge_lower.halved();
    if (auto up = theorem1_upper(g)) {
        out.arc.upper = BoundValue::of(*up, std::string("Theorem 1 (") + out.arc.case_tag + ")");
    } else {
        Lemma8Bound l8 = lemma8_upper_bound(g);
        out.arc.upper = BoundValue::of(
            l8.value, l8.c == Lemma8Case::Gap ? "constructive max arc load (Lemma 7)"
                                              : std::string("constructive routing (Lemma 8 ") +
                                                    to_string(l8.c) + ")");
    }
    out.arc.achieved = in.max_arc_load;
    detail::finish(out.arc);

    out.edge.target = "pi";
    out.edge.case_tag = out.arc.case_tag;
    out.edge.lower = edge_lower;
    out.edge.upper = out.arc.upper.doubled();
    if (in.max_edge_load) {
        Rational me(*in.max_edge_load);
        if (!out.edge.upper.exact || me <= *out.edge.upper.exact)
            out.edge.upper = BoundValue::of(me, "constructive max edge load");
    }
    out.edge.achieved = in.max_edge_load;
    detail::finish(out.edge);
    return out;
}

// Bracket for the directed optical index (and the derived undirected one).
// Lower bounds transfer from the forwarding indices; uppers come from the
// Theorem-4 case or the constructive colour count.
inline BracketPair theorem4_bracket(const CirculantGraph& g, const BracketInputs& in) {
    BracketPair out;
    const BoundValue edge_lower = best_edge_lower(g, in);

    out.arc.target = "w_arc";
    out.arc.case_tag = to_string(theorem4_case(g));
    out.arc.lower = edge_lower.halved();
    if (auto up = theorem4_upper(g)) {
        out.arc.upper = BoundValue::of(*up, std::string("Theorem 4 (") + out.arc.case_tag + ")");
    } else if (in.arc_colours) {
        out.arc.upper = BoundValue::of(Rational(*in.arc_colours), "constructive colouring");
    } else if (in.sumf) {
        out.arc.upper = BoundValue::of(Rational(*in.sumf), "palette-size formula");
    } else {
        out.arc.upper = BoundValue::of_real(std::numeric_limits<double>::infinity(), "unavailable");
    }
    out.arc.achieved = in.arc_colours;
    detail::finish(out.arc);

    out.edge.target = "w";
    out.edge.case_tag = out.arc.case_tag;
    out.edge.lower = edge_lower;
    out.edge.upper = out.arc.upper.doubled();
    if (in.edge_colours) {
        Rational ec(*in.edge_colours);
        if (!out.edge.upper.exact || ec <= *out.edge.upper.exact)
            out.edge.upper = BoundValue::of(ec, "constructive colouring");
    }
    out.edge.achieved = in.edge_colours;
    detail::finish(out.edge);
    return out;
}

// Achieved-over-lower ratios and the corollary applicability flags
// (s <= sqrt(3n/2) and 3 <= s <= 3 sqrt(n)/(2 sqrt 2) - 1, tested exactly).
struct RatioDiagnostics {
    std::optional<double> forwarding_ratio;       // max edge load / edge lower
    std::optional<double> forwarding_ratio_arc;   // max arc load / arc lower
    std::optional<double> optical_ratio;          // edge colours / edge lower
    std::optional<double> optical_ratio_arc;      // arc colours / arc lower
    bool corollary1_applicable = false;
    bool corollary2_applicable = false;
};

inline RatioDiagnostics ratio_diagnostics(const CirculantGraph& g, const BracketInputs& in) {
    RatioDiagnostics out;
    const BoundValue edge_lower = best_edge_lower(g, in);
    const double lo = edge_lower.approx;
    if (lo > 0.0) {
        if (in.max_edge_load) out.forwarding_ratio = static_cast<double>(*in.max_edge_load) / lo;
        if (in.max_arc_load)
            out.forwarding_ratio_arc = static_cast<double>(*in.max_arc_load) / (lo / 2.0);
        if (in.edge_colours) out.optical_ratio = static_cast<double>(*in.edge_colours) / lo;
        if (in.arc_colours)
            out.optical_ratio_arc = static_cast<double>(*in.arc_colours) / (lo / 2.0);
    }
    out.corollary1_applicable = 2 * g.s() * g.s() <= 3 * g.n();
    out.corollary2_applicable = g.s() >= 3 && 8 * (g.s() + 1) * (g.s() + 1) <= 9 * g.n();
    return out;
}

}  // namespace circroute
