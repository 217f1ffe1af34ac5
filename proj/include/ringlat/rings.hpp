#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

#include "ringlat/errors.hpp"

namespace ringlat {

// A weighted circulant graph C_n(l, a) or digraph C_n^+(l, a): vertices
// 0..n-1, an edge i -> i + a_h (mod n) of length l_h per generator (both
// directions when undirected).
struct CirculantSpec {
    std::int64_t n = 0;
    std::vector<std::int64_t> a;
    std::vector<double> lengths;
    bool directed = false;

    int k() const { return static_cast<int>(a.size()); }

    // True when every length is a positive integer; distance computations
    // then run in overflow-checked uint64 arithmetic.
    bool integral_lengths() const {
        for (double l : lengths)
            if (!(l > 0) || l != std::floor(l) || l > 0x1p53) return false;
        return true;
    }

    // 2k, 2k-1 (undirected with a_k = n/2), or k out-degree (directed).
    int degree() const {
        if (directed) return k();
        return 2 * k() - (2 * a.back() == n ? 1 : 0);
    }
};

inline CirculantSpec build_circulant(std::int64_t n, std::vector<std::int64_t> a,
                                     std::vector<double> lengths, bool directed) {
    if (n < 2) throw std::invalid_argument("build_circulant: n must be >= 2");
    if (a.empty()) throw std::invalid_argument("build_circulant: need k >= 1 generators");
    if (a.size() != lengths.size())
        throw std::invalid_argument("build_circulant: a and lengths must have equal size");
    std::int64_t prev = 0;
    for (std::int64_t ai : a) {
        if (ai <= prev) throw std::invalid_argument("build_circulant: a must be strictly increasing and positive");
        prev = ai;
    }
    if (directed) {
        if (a.back() >= n) throw std::invalid_argument("build_circulant: directed requires a_k < n");
    } else {
        if (2 * a.back() > n) throw std::invalid_argument("build_circulant: undirected requires a_k <= n/2");
    }
    for (double l : lengths)
        if (!(l > 0) || !std::isfinite(l))
            throw std::invalid_argument("build_circulant: lengths must be positive and finite");
    return CirculantSpec{n, std::move(a), std::move(lengths), directed};
}

inline bool is_connected(const CirculantSpec& spec) {
    std::int64_t g = spec.n;
    for (std::int64_t ai : spec.a) g = std::gcd(g, ai);
    return g == 1;
}

// Single-source distances from vertex 0, exploiting vertex transitivity:
// d(i, j) = dist[(j - i) mod n].  Unreachable vertices carry +inf (and
// UINT64_MAX on the exact path).
struct DistanceProfile {
    CirculantSpec spec;
    std::vector<double> dist;
    std::vector<std::uint64_t> dist_int; // filled iff exact
    bool exact = false;

    bool all_finite() const {
        for (double d : dist)
            if (!std::isfinite(d)) return false;
        return true;
    }
};

namespace detail {

constexpr std::uint64_t kUnreached = std::numeric_limits<std::uint64_t>::max();

// Generator moves as (delta mod n, weight); undirected lists both signs with
// the a_k = n/2 move deduplicated.
template <class W>
std::vector<std::pair<std::int64_t, W>> moves_of(const CirculantSpec& spec) {
    std::vector<std::pair<std::int64_t, W>> mv;
    for (int h = 0; h < spec.k(); ++h) {
        auto w = static_cast<W>(spec.lengths[h]);
        std::int64_t d = spec.a[h] % spec.n;
        mv.emplace_back(d, w);
        if (!spec.directed) {
            std::int64_t dn = spec.n - d;
            if (dn != d) mv.emplace_back(dn, w);
        }
    }
    return mv;
}

template <class W>
std::vector<W> shortest_paths(const CirculantSpec& spec, std::int64_t src, W unreached) {
    const std::int64_t n = spec.n;
    auto moves = moves_of<W>(spec);
    std::vector<W> dist(static_cast<std::size_t>(n), unreached);
    dist[static_cast<std::size_t>(src)] = W(0);

    bool uniform = true;
    for (auto& [d, w] : moves)
        if (w != moves[0].second) uniform = false;

    if (uniform) {
        // Equal edge lengths: plain breadth-first search, then scale.
        std::vector<std::int64_t> hops(static_cast<std::size_t>(n), -1);
        std::queue<std::int64_t> q;
        hops[static_cast<std::size_t>(src)] = 0;
        q.push(src);
        while (!q.empty()) {
            std::int64_t u = q.front();
            q.pop();
            for (auto& [d, w] : moves) {
                std::int64_t v = u + d;
                if (v >= n) v -= n;
                if (hops[static_cast<std::size_t>(v)] < 0) {
                    hops[static_cast<std::size_t>(v)] = hops[static_cast<std::size_t>(u)] + 1;
                    q.push(v);
                }
            }
        }
        for (std::int64_t v = 0; v < n; ++v) {
            if (hops[static_cast<std::size_t>(v)] < 0) continue;
            W h = static_cast<W>(hops[static_cast<std::size_t>(v)]);
            if constexpr (std::is_same_v<W, std::uint64_t>) {
                W d;
                if (__builtin_mul_overflow(h, moves[0].second, &d))
                    throw std::overflow_error("distance_profile: uint64 overflow");
                dist[static_cast<std::size_t>(v)] = d;
            } else {
                dist[static_cast<std::size_t>(v)] = h * moves[0].second;
            }
        }
        return dist;
    }

    // Label-setting over the k (or 2k) generator moves, binary heap.
    using Entry = std::pair<W, std::int64_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> pq;
    pq.emplace(W(0), src);
    while (!pq.empty()) {
        auto [du, u] = pq.top();
        pq.pop();
        if (du != dist[static_cast<std::size_t>(u)]) continue;
        for (auto& [d, w] : moves) {
            std::int64_t v = u + d;
            if (v >= n) v -= n;
            W dv;
            if constexpr (std::is_same_v<W, std::uint64_t>) {
                if (__builtin_add_overflow(du, w, &dv))
                    throw std::overflow_error("distance_profile: uint64 overflow");
            } else {
                dv = du + w;
            }
            if (dv < dist[static_cast<std::size_t>(v)]) {
                dist[static_cast<std::size_t>(v)] = dv;
                pq.emplace(dv, v);
            }
        }
    }
    return dist;
}

} // namespace detail

inline DistanceProfile distance_profile(const CirculantSpec& spec) {
    DistanceProfile p{spec, {}, {}, spec.integral_lengths()};
    if (p.exact) {
        p.dist_int = detail::shortest_paths<std::uint64_t>(spec, 0, detail::kUnreached);
        p.dist.resize(p.dist_int.size());
        for (std::size_t i = 0; i < p.dist_int.size(); ++i)
            p.dist[i] = p.dist_int[i] == detail::kUnreached
                            ? std::numeric_limits<double>::infinity()
                            : static_cast<double>(p.dist_int[i]);
    } else {
        p.dist = detail::shortest_paths<double>(spec, 0, std::numeric_limits<double>::infinity());
    }
    return p;
}

// Distances from an arbitrary source vertex (used to exercise vertex
// transitivity; distance_profile is the src = 0 case).
inline std::vector<double> distances_from(const CirculantSpec& spec, std::int64_t src) {
    if (src < 0 || src >= spec.n) throw std::invalid_argument("distances_from: bad source");
    return detail::shortest_paths<double>(spec, src, std::numeric_limits<double>::infinity());
}

inline double diameter(const DistanceProfile& p) {
    if (!p.all_finite()) throw disconnected_error("diameter: graph is not connected");
    return *std::max_element(p.dist.begin(), p.dist.end());
}

inline double diameter(const CirculantSpec& spec) { return diameter(distance_profile(spec)); }

// Exact integer diameter; requires integral lengths.
inline std::uint64_t diameter_exact(const DistanceProfile& p) {
    if (!p.exact) throw std::invalid_argument("diameter_exact: profile is not integer-exact");
    std::uint64_t best = 0;
    for (std::uint64_t d : p.dist_int) {
        if (d == detail::kUnreached) throw disconnected_error("diameter_exact: graph is not connected");
        best = std::max(best, d);
    }
    return best;
}

// M_alpha = (1/n) sum_j dist[j]^alpha; equals the all-pairs average
// (1/n^2) sum_{i,j} d(i,j)^alpha by vertex transitivity.
inline double moment(const DistanceProfile& p, int alpha) {
    if (alpha < 1) throw std::invalid_argument("moment: alpha must be a positive integer");
    if (!p.all_finite()) throw disconnected_error("moment: graph is not connected");
    long double sum = 0.0L;
    for (double d : p.dist) {
        long double t = 1.0L;
        for (int i = 0; i < alpha; ++i) t *= d;
        sum += t;
    }
    return static_cast<double>(sum / static_cast<long double>(p.dist.size()));
}

// Shortest directed cycle length: min_h ( l_h + dist(0, -a_h mod n) ).
inline double scl_directed(const DistanceProfile& p) {
    const CirculantSpec& spec = p.spec;
    if (!spec.directed) throw std::invalid_argument("scl_directed: spec must be directed");
    if (!p.all_finite()) throw disconnected_error("scl_directed: graph is not strongly connected");
    double best = std::numeric_limits<double>::infinity();
    for (int h = 0; h < spec.k(); ++h) {
        std::int64_t back = (spec.n - spec.a[h] % spec.n) % spec.n;
        best = std::min(best, spec.lengths[h] + p.dist[static_cast<std::size_t>(back)]);
    }
    return best;
}

inline double scl_directed(const CirculantSpec& spec) { return scl_directed(distance_profile(spec)); }

inline std::uint64_t scl_directed_exact(const DistanceProfile& p) {
    const CirculantSpec& spec = p.spec;
    if (!spec.directed) throw std::invalid_argument("scl_directed_exact: spec must be directed");
    if (!p.exact) throw std::invalid_argument("scl_directed_exact: profile is not integer-exact");
    std::uint64_t best = detail::kUnreached;
    for (int h = 0; h < spec.k(); ++h) {
        std::int64_t back = (spec.n - spec.a[h] % spec.n) % spec.n;
        std::uint64_t d = p.dist_int[static_cast<std::size_t>(back)];
        if (d == detail::kUnreached) throw disconnected_error("scl_directed_exact: not strongly connected");
        std::uint64_t cand;
        if (__builtin_add_overflow(d, static_cast<std::uint64_t>(spec.lengths[h]), &cand))
            throw std::overflow_error("scl_directed_exact: uint64 overflow");
        best = std::min(best, cand);
    }
    return best;
}

} // namespace ringlat
