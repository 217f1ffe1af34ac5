#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ringlat/errors.hpp"
#include "ringlat/rng.hpp"

namespace ringlat {

// Full-rank sublattice of Z^k, rows of `basis` are the basis vectors.
// For a kernel lattice of (a, n): every row m satisfies m.a = 0 (mod n)
// and |det| = n.
struct IntegerLattice {
    int k = 0;
    std::vector<std::vector<std::int64_t>> basis;
    std::uint64_t det_abs = 0;
};

// Full-rank lattice in R^k; covolume = |det basis|.
struct RealLattice {
    int k = 0;
    std::vector<std::vector<double>> basis;
    double covolume = 0.0;
};

namespace detail {

inline __int128 det_int(const std::vector<std::vector<std::int64_t>>& m) {
    // Fraction-free (Bareiss) elimination; fine for k <= 4.
    int k = static_cast<int>(m.size());
    std::vector<std::vector<__int128>> a(k, std::vector<__int128>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = m[i][j];
    __int128 prev = 1;
    int sign = 1;
    for (int p = 0; p < k - 1; ++p) {
        if (a[p][p] == 0) {
            int s = -1;
            for (int i = p + 1; i < k; ++i)
                if (a[i][p] != 0) { s = i; break; }
            if (s < 0) return 0;
            std::swap(a[p], a[s]);
            sign = -sign;
        }
        for (int i = p + 1; i < k; ++i)
            for (int j = p + 1; j < k; ++j)
                a[i][j] = (a[i][j] * a[p][p] - a[i][p] * a[p][j]) / prev;
        prev = a[p][p];
    }
    return sign * a[k - 1][k - 1];
}

inline double det_real(std::vector<std::vector<double>> a) {
    int k = static_cast<int>(a.size());
    double det = 1.0;
    for (int p = 0; p < k; ++p) {
        int piv = p;
        for (int i = p + 1; i < k; ++i)
            if (std::fabs(a[i][p]) > std::fabs(a[piv][p])) piv = i;
        if (a[piv][p] == 0.0) return 0.0;
        if (piv != p) { std::swap(a[piv], a[p]); det = -det; }
        det *= a[p][p];
        for (int i = p + 1; i < k; ++i) {
            double f = a[i][p] / a[p][p];
            for (int j = p; j < k; ++j) a[i][j] -= f * a[p][j];
        }
    }
    return det;
}

template <class T>
double norm2(const std::vector<T>& v) {
    double s = 0;
    for (T x : v) s += static_cast<double>(x) * static_cast<double>(x);
    return std::sqrt(s);
}

// Lagrange (Gauss) reduction for k = 2; LLL-style size reduction for k <= 4.
// Only a preconditioner: enumeration correctness comes from certified
// coefficient boxes, not from reduction quality.
template <class T>
void size_reduce(std::vector<std::vector<T>>& b) {
    int k = static_cast<int>(b.size());
    if (k == 1) return;
    auto dot = [&](const std::vector<T>& u, const std::vector<T>& v) {
        double s = 0;
        for (int i = 0; i < static_cast<int>(u.size()); ++i)
            s += static_cast<double>(u[i]) * static_cast<double>(v[i]);
        return s;
    };
    if (k == 2) {
        for (int iter = 0; iter < 256; ++iter) {
            if (norm2(b[0]) > norm2(b[1])) std::swap(b[0], b[1]);
            double mu = dot(b[1], b[0]) / dot(b[0], b[0]);
            long long q = std::llround(mu);
            if (q == 0) break;
            for (int i = 0; i < 2; ++i) b[1][i] -= static_cast<T>(q) * b[0][i];
        }
        return;
    }
    // Tiny LLL (delta = 0.99) with floating Gram-Schmidt.
    for (int rounds = 0; rounds < 1000; ++rounds) {
        std::vector<std::vector<double>> gs(k, std::vector<double>(k));
        std::vector<std::vector<double>> mu(k, std::vector<double>(k, 0.0));
        std::vector<double> nsq(k);
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) gs[i][j] = static_cast<double>(b[i][j]);
            for (int j = 0; j < i; ++j) {
                double m = 0, d = 0;
                for (int t = 0; t < k; ++t) { m += static_cast<double>(b[i][t]) * gs[j][t]; d += gs[j][t] * gs[j][t]; }
                mu[i][j] = d > 0 ? m / d : 0;
                for (int t = 0; t < k; ++t) gs[i][t] -= mu[i][j] * gs[j][t];
            }
            nsq[i] = 0;
            for (int t = 0; t < k; ++t) nsq[i] += gs[i][t] * gs[i][t];
        }
        bool changed = false;
        for (int i = 1; i < k; ++i)
            for (int j = i - 1; j >= 0; --j) {
                long long q = std::llround(mu[i][j]);
                if (q != 0) {
                    for (int t = 0; t < k; ++t) b[i][t] -= static_cast<T>(q) * b[j][t];
                    changed = true;
                }
            }
        if (changed) continue;
        bool swapped = false;
        for (int i = 0; i + 1 < k; ++i) {
            if (nsq[i + 1] + mu[i + 1][i] * mu[i + 1][i] * nsq[i] < 0.99 * nsq[i]) {
                std::swap(b[i], b[i + 1]);
                swapped = true;
                break;
            }
        }
        if (!swapped) break;
    }
}

// Coefficient box certified to contain every lattice vector of Euclidean
// norm <= bound: by Cramer + Hadamard, |c_i| <= bound * prod_{j != i} |b_j| / |det|.
template <class T>
std::vector<std::int64_t> coeff_box(const std::vector<std::vector<T>>& b, double det_abs, double bound) {
    int k = static_cast<int>(b.size());
    std::vector<double> norms(k);
    for (int i = 0; i < k; ++i) norms[i] = norm2(b[i]);
    std::vector<std::int64_t> box(k);
    for (int i = 0; i < k; ++i) {
        double prod = 1.0;
        for (int j = 0; j < k; ++j)
            if (j != i) prod *= norms[j];
        double lim = bound * prod / det_abs * (1.0 + 1e-9) + 1.0;
        if (lim > 5e7) throw budget_error("lattice enumeration: coefficient box too large");
        box[i] = static_cast<std::int64_t>(std::floor(lim));
    }
    return box;
}

// Enumerate all coefficient vectors c in the box (excluding 0 if skip_zero),
// calling f(vector m = c*B).
template <class T, class F>
void enumerate_box(const std::vector<std::vector<T>>& b, const std::vector<std::int64_t>& box,
                   bool skip_zero, F&& f) {
    int k = static_cast<int>(b.size());
    std::vector<std::int64_t> c(k, 0);
    std::vector<T> m(k, T(0));
    std::uint64_t cells = 1;
    for (int i = 0; i < k; ++i) {
        cells *= static_cast<std::uint64_t>(2 * box[i] + 1);
        if (cells > 200'000'000ULL) throw budget_error("lattice enumeration: box too large");
    }
    // Recursive descent over coordinates.
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            if (skip_zero) {
                bool zero = true;
                for (std::int64_t ci : c)
                    if (ci != 0) { zero = false; break; }
                if (zero) return;
            }
            for (int t = 0; t < k; ++t) {
                double acc = 0;
                for (int i = 0; i < k; ++i) acc += static_cast<double>(c[i]) * static_cast<double>(b[i][t]);
                m[t] = static_cast<T>(acc);
            }
            if constexpr (std::is_same_v<T, std::int64_t>) {
                // redo exactly in integers
                for (int t = 0; t < k; ++t) {
                    std::int64_t acc = 0;
                    for (int i = 0; i < k; ++i) acc += c[i] * b[i][t];
                    m[t] = acc;
                }
            }
            f(c, m);
            return;
        }
        for (std::int64_t v = -box[depth]; v <= box[depth]; ++v) {
            c[depth] = v;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
}

} // namespace detail

// Basis of {m in Z^k : m.a = 0 (mod n)} via extended-gcd column reduction of
// the augmented row (a_1,...,a_k,n), projected to the first k coordinates.
// The projection is injective because the last coordinate is determined.
inline IntegerLattice kernel_lattice(const std::vector<std::int64_t>& a, std::int64_t n) {
    int k = static_cast<int>(a.size());
    if (k < 1 || n < 1) throw std::invalid_argument("kernel_lattice: need k >= 1, n >= 1");
    std::int64_t g = n;
    for (std::int64_t ai : a) {
        if (ai <= 0 || ai >= n) throw std::invalid_argument("kernel_lattice: need 0 < a_i < n");
        g = std::gcd(g, ai);
    }
    if (g != 1) throw std::invalid_argument("kernel_lattice: gcd(a, n) must be 1");

    const int d = k + 1;
    std::vector<std::int64_t> v(a);
    v.push_back(n);
    // Columns of U track the unimodular column operations applied to v.
    std::vector<std::vector<std::int64_t>> U(d, std::vector<std::int64_t>(d, 0));
    for (int i = 0; i < d; ++i) U[i][i] = 1;

    auto col_axpy = [&](int dst, int src, std::int64_t q) {
        // column_dst -= q * column_src
        v[dst] -= q * v[src];
        for (int r = 0; r < d; ++r) U[r][dst] -= q * U[r][src];
    };

    for (;;) {
        int piv = -1;
        for (int j = 0; j < d; ++j)
            if (v[j] != 0 && (piv < 0 || std::llabs(v[j]) < std::llabs(v[piv]))) piv = j;
        bool done = true;
        for (int j = 0; j < d; ++j) {
            if (j == piv || v[j] == 0) continue;
            std::int64_t q = v[j] / v[piv];
            if (q != 0) col_axpy(j, piv, q);
            if (v[j] != 0) done = false;
        }
        if (done) {
            // move the surviving nonzero to column 0
            if (piv != 0) {
                std::swap(v[piv], v[0]);
                for (int r = 0; r < d; ++r) std::swap(U[r][piv], U[r][0]);
            }
            break;
        }
    }
    // Columns 1..k of U span the kernel of (a|n); keep first k coordinates.
    IntegerLattice lat;
    lat.k = k;
    lat.basis.assign(static_cast<std::size_t>(k), std::vector<std::int64_t>(static_cast<std::size_t>(k)));
    for (int j = 1; j <= k; ++j)
        for (int r = 0; r < k; ++r) lat.basis[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(r)] = U[r][j];
    detail::size_reduce(lat.basis);
    __int128 det = detail::det_int(lat.basis);
    if (det < 0) det = -det;
    if (det != static_cast<__int128>(n))
        throw std::logic_error("kernel_lattice: determinant != n");
    lat.det_abs = static_cast<std::uint64_t>(n);
    return lat;
}

// L_{n,a,l} = Lambda * diag(Pi^{-1/k} l_1, ..., Pi^{-1/k} l_k) with
// Pi = n l_1...l_k; covolume one by construction.
inline RealLattice rescale(const IntegerLattice& lat, std::int64_t n, const std::vector<double>& lengths) {
    if (lat.det_abs != static_cast<std::uint64_t>(n))
        throw std::invalid_argument("rescale: lattice determinant must equal n");
    if (static_cast<int>(lengths.size()) != lat.k)
        throw std::invalid_argument("rescale: need one length per dimension");
    double pi = static_cast<double>(n);
    for (double l : lengths) {
        if (!(l > 0)) throw std::invalid_argument("rescale: lengths must be positive");
        pi *= l;
    }
    double scale = std::pow(pi, -1.0 / lat.k);
    RealLattice out;
    out.k = lat.k;
    out.basis.assign(lat.basis.size(), std::vector<double>(static_cast<std::size_t>(lat.k)));
    for (std::size_t i = 0; i < lat.basis.size(); ++i)
        for (int j = 0; j < lat.k; ++j)
            out.basis[i][static_cast<std::size_t>(j)] =
                static_cast<double>(lat.basis[i][static_cast<std::size_t>(j)]) * scale * lengths[static_cast<std::size_t>(j)];
    out.covolume = 1.0;
    return out;
}

inline RealLattice real_lattice(std::vector<std::vector<double>> basis) {
    RealLattice out;
    out.k = static_cast<int>(basis.size());
    out.basis = std::move(basis);
    double det = detail::det_real(out.basis);
    if (det == 0.0) throw std::invalid_argument("real_lattice: basis is singular");
    out.covolume = std::fabs(det);
    return out;
}

// --- shortest vectors -------------------------------------------------------

// Minimize the weighted l1 value sum_h l_h |m_h| over nonzero lattice vectors.
// Reduction + exhaustive enumeration of the certified coefficient box.
template <class T>
std::pair<std::vector<T>, double> shortest_weighted_l1_impl(std::vector<std::vector<T>> b,
                                                            double det_abs,
                                                            const std::vector<double>& lengths) {
    int k = static_cast<int>(b.size());
    if (static_cast<int>(lengths.size()) != k)
        throw std::invalid_argument("shortest_weighted_l1: need one length per dimension");
    detail::size_reduce(b);
    double lmin = *std::min_element(lengths.begin(), lengths.end());
    auto value = [&](const std::vector<T>& m) {
        double s = 0;
        for (int i = 0; i < k; ++i) s += lengths[static_cast<std::size_t>(i)] * std::fabs(static_cast<double>(m[i]));
        return s;
    };
    // warm start: best single basis vector
    double best = std::numeric_limits<double>::infinity();
    std::vector<T> bestv;
    for (auto& row : b) {
        double v = value(row);
        if (v < best) { best = v; bestv = row; }
    }
    auto box = detail::coeff_box(b, det_abs, best / lmin);
    detail::enumerate_box(b, box, true, [&](const std::vector<std::int64_t>&, const std::vector<T>& m) {
        double v = value(m);
        if (v < best - 1e-15 * (1 + std::fabs(best))) { best = v; bestv = m; }
    });
    return {bestv, best};
}

inline std::pair<std::vector<std::int64_t>, double>
shortest_weighted_l1(const IntegerLattice& lat, const std::vector<double>& lengths) {
    return shortest_weighted_l1_impl(lat.basis, static_cast<double>(lat.det_abs), lengths);
}

inline std::pair<std::vector<double>, double>
shortest_weighted_l1(const RealLattice& lat, const std::vector<double>& lengths) {
    return shortest_weighted_l1_impl(lat.basis, lat.covolume, lengths);
}

// Minimum of m.l over nonzero lattice vectors with all components >= 0,
// bounded enumeration with a doubling budget (a full-rank lattice always
// meets the open positive cone, so this terminates).
template <class T>
double shortest_nonneg_impl(std::vector<std::vector<T>> b, double det_abs,
                            const std::vector<double>& lengths, double nonneg_eps) {
    int k = static_cast<int>(b.size());
    if (static_cast<int>(lengths.size()) != k)
        throw std::invalid_argument("shortest_nonneg: need one length per dimension");
    detail::size_reduce(b);
    double lmin = *std::min_element(lengths.begin(), lengths.end());
    double budget = 0;
    for (auto& row : b) {
        double s = 0;
        for (int i = 0; i < k; ++i) s += lengths[static_cast<std::size_t>(i)] * std::fabs(static_cast<double>(row[i]));
        budget += s;
    }
    budget *= 4;
    for (int round = 0; round < 64; ++round, budget *= 2) {
        double best = std::numeric_limits<double>::infinity();
        auto box = detail::coeff_box(b, det_abs, budget / lmin);
        detail::enumerate_box(b, box, true, [&](const std::vector<std::int64_t>&, const std::vector<T>& m) {
            double val = 0;
            for (int i = 0; i < k; ++i) {
                double mi = static_cast<double>(m[i]);
                if (mi < -nonneg_eps) return;
                val += lengths[static_cast<std::size_t>(i)] * mi;
            }
            if (val <= budget && val < best && val > 0) best = val;
        });
        if (best < std::numeric_limits<double>::infinity()) return best;
    }
    throw budget_error("shortest_nonneg: enumeration budget exhausted");
}

inline double shortest_nonneg(const IntegerLattice& lat, const std::vector<double>& lengths) {
    return shortest_nonneg_impl(lat.basis, static_cast<double>(lat.det_abs), lengths, 0.0);
}

inline double shortest_nonneg(const RealLattice& lat, const std::vector<double>& lengths) {
    return shortest_nonneg_impl(lat.basis, lat.covolume, lengths, 1e-12);
}

// --- distance functionals on the torus R^k / L ------------------------------

namespace detail {

struct PsiContext {
    std::vector<std::vector<double>> b; // reduced basis
    double det_abs;
    int k;
};

inline PsiContext psi_context(const RealLattice& lat) {
    PsiContext ctx{lat.basis, lat.covolume, lat.k};
    size_reduce(ctx.b);
    return ctx;
}

} // namespace detail

// Psi_L(y) = min over z in (y + L) with z >= 0 of z_1 + ... + z_k.
inline double psi_directed(const RealLattice& lat, const std::vector<double>& y) {
    if (static_cast<int>(y.size()) != lat.k) throw std::invalid_argument("psi_directed: dimension mismatch");
    auto ctx = detail::psi_context(lat);
    double ynorm = 0, scale = 0;
    for (double yi : y) ynorm += std::fabs(yi);
    for (auto& row : ctx.b)
        for (double v : row) scale = std::max(scale, std::fabs(v));
    const double eps = 1e-12 * (1 + scale + ynorm);
    double budget = 0;
    for (auto& row : ctx.b) {
        double s = 0;
        for (double v : row) s += std::fabs(v);
        budget += s;
    }
    budget = 4 * budget + ynorm;
    for (int round = 0; round < 64; ++round, budget *= 2) {
        double best = std::numeric_limits<double>::infinity();
        auto box = detail::coeff_box(ctx.b, ctx.det_abs, budget + ynorm);
        detail::enumerate_box(ctx.b, box, false, [&](const std::vector<std::int64_t>&, const std::vector<double>& m) {
            double val = 0;
            for (int i = 0; i < ctx.k; ++i) {
                double zi = y[static_cast<std::size_t>(i)] + m[i];
                if (zi < -eps) return;
                val += std::max(zi, 0.0);
            }
            best = std::min(best, val);
        });
        if (best <= budget) return best;
    }
    throw budget_error("psi_directed: enumeration budget exhausted");
}

// Psi~_L(y) = min over z in y + L of |z_1| + ... + |z_k| (the l1 distance
// from -y to the lattice).
inline double psi_undirected(const RealLattice& lat, const std::vector<double>& y) {
    if (static_cast<int>(y.size()) != lat.k) throw std::invalid_argument("psi_undirected: dimension mismatch");
    auto ctx = detail::psi_context(lat);
    // Babai rounding gives a finite upper bound, so a single certified box suffices.
    std::vector<double> resid(y);
    // crude nearest-plane: project out rows in reverse order
    for (int i = ctx.k - 1; i >= 0; --i) {
        double num = 0, den = 0;
        for (int t = 0; t < ctx.k; ++t) {
            num += resid[static_cast<std::size_t>(t)] * ctx.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
            den += ctx.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] * ctx.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
        }
        double q = std::round(num / den);
        for (int t = 0; t < ctx.k; ++t)
            resid[static_cast<std::size_t>(t)] -= q * ctx.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
    }
    double bound = 0, ynorm = 0;
    for (double r : resid) bound += std::fabs(r);
    for (double yi : y) ynorm += std::fabs(yi);
    double best = bound;
    auto box = detail::coeff_box(ctx.b, ctx.det_abs, bound + ynorm + 1e-12);
    detail::enumerate_box(ctx.b, box, false, [&](const std::vector<std::int64_t>&, const std::vector<double>& m) {
        double val = 0;
        for (int i = 0; i < ctx.k; ++i) val += std::fabs(y[static_cast<std::size_t>(i)] + m[i]);
        best = std::min(best, val);
    });
    return best;
}

// Monte Carlo estimate of the torus integral of Psi_L^alpha (directed) or
// Psi~_L^alpha, sampling y uniformly in the fundamental parallelepiped.
// Deterministic for fixed seed.
inline double torus_moment_mc(const RealLattice& lat, int alpha, bool directed,
                              std::int64_t samples, std::uint64_t seed) {
    if (samples <= 0) throw std::invalid_argument("torus_moment_mc: samples must be positive");
    if (alpha < 1) throw std::invalid_argument("torus_moment_mc: alpha must be a positive integer");
    auto ctx = detail::psi_context(lat);
    const int k = ctx.k;

    // Candidate offsets: all lattice vectors that can realize the minimum for
    // some y in the cell, certified by the covering bound; doubled on demand.
    double cover = 0;
    for (auto& row : ctx.b) {
        double s = 0;
        for (double v : row) s += std::fabs(v);
        cover += s;
    }
    double ycell = cover; // |y|_1 <= sum of row l1 norms inside the cell
    double bmax = 2 * cover + 1e-9;

    std::vector<std::vector<double>> cand;
    auto rebuild = [&]() {
        cand.clear();
        auto box = detail::coeff_box(ctx.b, ctx.det_abs, bmax + ycell);
        detail::enumerate_box(ctx.b, box, false, [&](const std::vector<std::int64_t>&, const std::vector<double>& m) {
            cand.push_back(m);
        });
    };
    rebuild();

    SplitMix64 rng(seed);
    long double acc = 0.0L;
    std::vector<double> y(static_cast<std::size_t>(k));
    for (std::int64_t s = 0; s < samples; ++s) {
        std::array<double, 8> u{};
        for (int i = 0; i < k; ++i) u[static_cast<std::size_t>(i)] = rng.next_double();
        for (int t = 0; t < k; ++t) {
            double acc2 = 0;
            for (int i = 0; i < k; ++i)
                acc2 += u[static_cast<std::size_t>(i)] * ctx.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
            y[static_cast<std::size_t>(t)] = acc2;
        }
        double val;
        for (;;) {
            val = std::numeric_limits<double>::infinity();
            for (auto& m : cand) {
                double v = 0;
                bool ok = true;
                for (int i = 0; i < k; ++i) {
                    double zi = y[static_cast<std::size_t>(i)] + m[static_cast<std::size_t>(i)];
                    if (directed) {
                        if (zi < -1e-12 * (1 + cover)) { ok = false; break; }
                        v += std::max(zi, 0.0);
                    } else {
                        v += std::fabs(zi);
                    }
                }
                if (ok) val = std::min(val, v);
            }
            if (val <= bmax) break;
            bmax *= 2;
            rebuild(); // enlarging the candidate set never changes earlier minima
        }
        long double p = 1.0L;
        for (int i = 0; i < alpha; ++i) p *= val;
        acc += p;
    }
    return static_cast<double>(acc / static_cast<long double>(samples));
}

// --- parametrized oracle lattices -------------------------------------------

// L_(alpha,beta,gamma) = delta^{-1/2} (Z(alpha,-beta) + Z(1,gamma-beta)),
// delta = (1-alpha)beta + alpha gamma, defined for (alpha,beta,gamma) in
// (0,1)^3 with beta+gamma > 1.  The unit square's covering radius with
// respect to this lattice is exactly delta^{-1/2}: the square touching
// lattice points at (alpha,0), (0,beta), (1,gamma) on its sides is a
// critical empty placement.
inline RealLattice omega_lattice(double alpha, double beta, double gamma) {
    auto in01 = [](double t) { return t > 0.0 && t < 1.0; };
    if (!in01(alpha) || !in01(beta) || !in01(gamma) || !(beta + gamma > 1.0))
        throw std::invalid_argument("omega_lattice: need (alpha,beta,gamma) in (0,1)^3 with beta+gamma > 1");
    double delta = (1.0 - alpha) * beta + alpha * gamma;
    double s = 1.0 / std::sqrt(delta);
    RealLattice out;
    out.k = 2;
    out.basis = {{s * alpha, -s * beta}, {s, s * (gamma - beta)}};
    out.covolume = 1.0;
    return out;
}

inline double omega_delta(double alpha, double beta, double gamma) {
    return (1.0 - alpha) * beta + alpha * gamma;
}

// kappa^{-1/2} (Z(-1/2+gamma, -alpha-gamma) + Z(beta+gamma, -1/2-gamma)),
// kappa = 1/4 + alpha beta + alpha gamma + beta gamma, on the region
// (-1/2,1/2)^3 with alpha+beta > 0, alpha+gamma > 0, beta+gamma > 0 and
// alpha+beta+gamma < 1/2.  The simplex covering radius is exactly
// kappa^{-1/2} (critical empty triangle touching all three sides).
inline RealLattice kappa_lattice(double alpha, double beta, double gamma) {
    auto inh = [](double t) { return t > -0.5 && t < 0.5; };
    if (!inh(alpha) || !inh(beta) || !inh(gamma) || !(alpha + beta > 0.0) ||
        !(alpha + gamma > 0.0) || !(beta + gamma > 0.0) || !(alpha + beta + gamma < 0.5))
        throw std::invalid_argument("kappa_lattice: parameters outside the admissible region");
    double kappa = 0.25 + alpha * beta + alpha * gamma + beta * gamma;
    double s = 1.0 / std::sqrt(kappa);
    RealLattice out;
    out.k = 2;
    out.basis = {{s * (-0.5 + gamma), s * (-alpha - gamma)}, {s * (beta + gamma), s * (-0.5 - gamma)}};
    out.covolume = 1.0;
    return out;
}

inline double kappa_value(double alpha, double beta, double gamma) {
    return 0.25 + alpha * beta + alpha * gamma + beta * gamma;
}

} // namespace ringlat
