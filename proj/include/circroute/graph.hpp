#pragma once

#include <array>
#include <cstdint>
#include <queue>
#include <vector>

#include "circroute/rational.hpp"

namespace circroute {

using Node = long long;

// The 4-regular circulant graph C_n(1,s) on Z_n, connection set {+-1, +-s}.
// Immutable after construction; q = floor(n/s) and r = n - q*s are derived.
class CirculantGraph {
public:
    CirculantGraph(long long n, long long s) : n_(n), s_(s) {
        if (n < 5) throw DomainError("n >= 5 violated (n=" + std::to_string(n) + ")");
        if (s <= 1) throw DomainError("s > 1 violated (s=" + std::to_string(s) + ")");
        if (2 * s >= n)
            throw DomainError("s < n/2 violated (n=" + std::to_string(n) +
                              ", s=" + std::to_string(s) + ")");
        q_ = n / s;
        r_ = n - q_ * s;
    }

    long long n() const { return n_; }
    long long s() const { return s_; }
    long long q() const { return q_; }
    long long r() const { return r_; }

    // Canonical residue in [0, n).
    Node mod(long long v) const {
        long long m = v % n_;
        return m < 0 ? m + n_ : m;
    }
    Node add(Node x, long long k) const { return mod(x + k); }
    Node sub(Node x, long long k) const { return mod(x - k); }

    std::array<Node, 4> neighbours(Node x) const {
        return {add(x, 1), sub(x, 1), add(x, s_), sub(x, s_)};
    }

private:
    long long n_, s_, q_, r_;
};

inline CirculantGraph build(long long n, long long s) { return CirculantGraph(n, s); }

enum class ArcClass { RingCW, RingACW, SkipCW, SkipACW };

struct Arc {
    Node tail;
    Node head;
    ArcClass cls;
};

inline const char* to_string(ArcClass c) {
    switch (c) {
        case ArcClass::RingCW: return "ring_cw";
        case ArcClass::RingACW: return "ring_acw";
        case ArcClass::SkipCW: return "skip_cw";
        case ArcClass::SkipACW: return "skip_acw";
    }
    return "?";
}

// BFS from src over the four steps. This is the designated ground-truth
// distance oracle: lattice formulas are checked against it, never the reverse.
inline std::vector<int> distances_from(const CirculantGraph& g, Node src) {
    std::vector<int> dist(static_cast<size_t>(g.n()), -1);
    std::queue<Node> queue;
    dist[static_cast<size_t>(src)] = 0;
    queue.push(src);
    while (!queue.empty()) {
        Node u = queue.front();
        queue.pop();
        for (Node v : g.neighbours(u)) {
            if (dist[static_cast<size_t>(v)] < 0) {
                dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
                queue.push(v);
            }
        }
    }
    return dist;
}

inline int distance(const CirculantGraph& g, Node x, Node y) {
    if (x < 0 || x >= g.n() || y < 0 || y >= g.n())
        throw DomainError("node out of range");
    if (x == y) return 0;
    return distances_from(g, x)[static_cast<size_t>(y)];
}

// sum_i d(0,i). By vertex-transitivity the all-ordered-pairs total is n times
// this value.
inline long long distance_sum_from_zero(const CirculantGraph& g) {
    long long sum = 0;
    for (int d : distances_from(g, 0)) sum += d;
    return sum;
}

// |delta(U)| for U = {0, ..., floor(n/2)-1}; equals 2s+2 for every valid graph.
inline long long cut_size_halfline(const CirculantGraph& g) {
    const long long half = g.n() / 2;
    auto in_u = [&](Node v) { return v < half; };
    long long count = 0;
    for (Node x = 0; x < g.n(); ++x) {
        for (Node y : {g.add(x, 1), g.add(x, g.s())}) {
            if (in_u(x) != in_u(y)) ++count;
        }
    }
    return count;
}

}  // namespace circroute
