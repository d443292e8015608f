#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "circroute/graph.hpp"

namespace circroute {

// Integer lattice view of C_n(1,s): the labelling l(x1,x2) = x1 + x2*s mod n
// maps Z^2 onto Z_n, and X = l^{-1}(0) is the sublattice of label-0 points.
struct LatticePoint {
    long long x1 = 0;
    long long x2 = 0;

    long long norm1() const { return std::llabs(x1) + std::llabs(x2); }
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

inline LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
inline LatticePoint operator-(LatticePoint a, LatticePoint b) { return {a.x1 - b.x1, a.x2 - b.x2}; }

inline Node label(const CirculantGraph& g, LatticePoint p) {
    return g.mod(p.x1 + p.x2 * g.s());
}

enum class BasisCase { A, B, C };

inline const char* to_string(BasisCase c) {
    switch (c) {
        case BasisCase::A: return "A";
        case BasisCase::B: return "B";
        case BasisCase::C: return "C";
    }
    return "?";
}

// Basis of X satisfying max{|a|,|b|} <= min{|a-b|,|a+b|} in the L1 norm.
struct PackedBasis {
    LatticePoint a;
    LatticePoint b;
    BasisCase tag;
};

inline bool is_packed(LatticePoint a, LatticePoint b) {
    return std::max(a.norm1(), b.norm1()) <= std::min((a - b).norm1(), (a + b).norm1());
}

// Case A: r<=q, 2r<=s+1 -> {(s,-1),(r,q)}; cases B/C -> {(s,-1),(r-s,q+1)}.
// Ties (2r == s+1) resolve to the lowest tag. No basis is known when r > q
// and r+q < s+1; those graphs are served by the BFS oracle only.
inline std::optional<PackedBasis> packed_basis(const CirculantGraph& g) {
    const long long s = g.s(), q = g.q(), r = g.r();
    if (r <= q && 2 * r <= s + 1) return PackedBasis{{s, -1}, {r, q}, BasisCase::A};
    if (r <= q && 2 * r >= s + 1) return PackedBasis{{s, -1}, {r - s, q + 1}, BasisCase::B};
    if (r >= q && r + q >= s + 1) return PackedBasis{{s, -1}, {r - s, q + 1}, BasisCase::C};
    return std::nullopt;
}

// The half-open parallelogram [a,b) = {alpha*a + beta*b : 0 <= alpha,beta < 1}
// contains exactly one lattice point per label. Membership is decided with
// exact integer arithmetic: the point (x1,x2) has basis coordinates
// alpha = (b2*x1 - b1*x2)/det, beta = (a1*x2 - a2*x1)/det with |det| = n.
class ParallelogramIndex {
public:
    ParallelogramIndex(const CirculantGraph& g, const PackedBasis& basis)
        : corners_{LatticePoint{0, 0}, basis.a, basis.b, basis.a + basis.b} {
        const long long n = g.n();
        const LatticePoint a = basis.a, b = basis.b;
        const long long det = a.x1 * b.x2 - a.x2 * b.x1;
        if (det != n && det != -n)
            throw ConsistencyError("basis determinant " + std::to_string(det) +
                                   " does not have |det| = n");
        long long xs[4] = {0, a.x1, b.x1, a.x1 + b.x1};
        long long ys[4] = {0, a.x2, b.x2, a.x2 + b.x2};
        point_for_label_.assign(static_cast<size_t>(n), std::nullopt);
        long long found = 0;
        for (long long x1 = *std::min_element(xs, xs + 4); x1 <= *std::max_element(xs, xs + 4); ++x1) {
            for (long long x2 = *std::min_element(ys, ys + 4); x2 <= *std::max_element(ys, ys + 4); ++x2) {
                const long long an = b.x2 * x1 - b.x1 * x2;
                const long long bn = a.x1 * x2 - a.x2 * x1;
                const bool inside = det > 0 ? (0 <= an && an < det && 0 <= bn && bn < det)
                                            : (det < an && an <= 0 && det < bn && bn <= 0);
                if (!inside) continue;
                const Node l = label(g, {x1, x2});
                if (point_for_label_[static_cast<size_t>(l)])
                    throw ConsistencyError("two parallelogram points share label " +
                                           std::to_string(l));
                point_for_label_[static_cast<size_t>(l)] = LatticePoint{x1, x2};
                ++found;
            }
        }
        if (found != n)
            throw ConsistencyError("parallelogram holds " + std::to_string(found) +
                                   " points, expected n=" + std::to_string(n));
    }

    const LatticePoint& point_for(Node target) const {
        const auto& p = point_for_label_.at(static_cast<size_t>(target));
        if (!p) throw ConsistencyError("no parallelogram point with label " + std::to_string(target));
        return *p;
    }

    // min over the four corner points of ||v - corner||_1; equals d(0,target)
    // whenever the basis is packed.
    long long corner_distance(Node target) const {
        const LatticePoint v = point_for(target);
        long long best = (v - corners_[0]).norm1();
        for (int k = 1; k < 4; ++k) best = std::min(best, (v - corners_[k]).norm1());
        return best;
    }

private:
    std::array<LatticePoint, 4> corners_;
    std::vector<std::optional<LatticePoint>> point_for_label_;
};

inline long long corner_distance(const CirculantGraph& g, const PackedBasis& basis, Node target) {
    return ParallelogramIndex(g, basis).corner_distance(target);
}

// Lower bound floor((s+1)^2 / 2) on sum_i d(0,i), valid when r<=q or r+q>=s+1.
inline std::optional<long long> distance_sum_lower_bound(const CirculantGraph& g) {
    if (g.r() <= g.q() || g.r() + g.q() >= g.s() + 1)
        return (g.s() + 1) * (g.s() + 1) / 2;
    return std::nullopt;
}

// Exact distance sum sqrt(n)(n-1)/2 in the square case s = q = sqrt(n).
inline std::optional<long long> sqrt_case_distance_sum(const CirculantGraph& g) {
    if (g.s() * g.s() == g.n() && g.q() == g.s())
        return g.s() * (g.n() - 1) / 2;
    return std::nullopt;
}

}  // namespace circroute
