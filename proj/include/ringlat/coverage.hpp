#pragma once

// Covering radii of 2-d convex polytopes with respect to lattices.
//
// rho(P, L) = inf{ r > 0 : rP + L = R^2 } is located by bisection on r.  Each
// step decides whether the translates rP + m cover the plane, equivalently
// whether they cover one fundamental parallelogram of L: the cell is clipped
// against every translate that can meet it (a certified finite neighbor set,
// bounded in basis coordinates), and coverage holds iff the leftover area is
// zero.  The leftover is maintained as a list of convex pieces, so each
// translate costs one convex difference per surviving piece.
//
// Two instantiations: exact rationals (mpq) for integer lattices with
// rational polytopes and dyadic-rational radii, and long double with a
// snapping tolerance for real lattices.

#include <gmpxx.h>

#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

#include "ringlat/errors.hpp"
#include "ringlat/lattice.hpp"
#include "ringlat/polytope.hpp"

namespace ringlat {
namespace geo {

template <class S>
using Pt = std::array<S, 2>;
template <class S>
using Poly = std::vector<Pt<S>>;

template <class S>
S cross(const Pt<S>& a, const Pt<S>& b) {
    return a[0] * b[1] - a[1] * b[0];
}

template <class S>
Pt<S> sub(const Pt<S>& a, const Pt<S>& b) {
    return {a[0] - b[0], a[1] - b[1]};
}

// Twice the signed area (positive for CCW).
template <class S>
S area2(const Poly<S>& p) {
    S s(0);
    for (std::size_t i = 0, n = p.size(); i < n; ++i) {
        const Pt<S>& a = p[i];
        const Pt<S>& b = p[(i + 1) % n];
        s += cross(a, b);
    }
    return s;
}

// Split `poly` by the line through u with direction e, shifted outward by
// eps: "in" keeps cross(e, p-u) >= -eps, "out" gets the rest.  The two parts
// share the chord exactly, so no area is lost or duplicated.
template <class S>
void split(const Poly<S>& poly, const Pt<S>& u, const Pt<S>& e, const S& eps,
           Poly<S>& in, Poly<S>& out) {
    in.clear();
    out.clear();
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Pt<S>& p = poly[i];
        const Pt<S>& q = poly[(i + 1) % n];
        S sp = cross(e, sub(p, u)) + eps;
        S sq = cross(e, sub(q, u)) + eps;
        bool pin = sp >= S(0);
        bool qin = sq >= S(0);
        (pin ? in : out).push_back(p);
        if (pin != qin) {
            S t = sp / (sp - sq);
            Pt<S> x{p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])};
            in.push_back(x);
            out.push_back(x);
        }
    }
}

template <class S>
struct Engine {
    Pt<S> b1, b2;     // lattice basis rows, det > 0
    S det;            // cell area
    S eps_side;       // snapping for clip classification (0 = exact)
    S eps_piece;      // pieces with area2 below this are dropped
    S eps_total;      // uncovered-area2 threshold for "covered"

    // Does rP (given by its CCW vertex list `pv`) tile the plane together
    // with its lattice translates?
    bool covered(const Poly<S>& pv) const {
        Poly<S> cell{{S(0), S(0)}, b1, {b1[0] + b2[0], b1[1] + b2[1]}, b2};

        // Coefficient range of translates that can meet the cell: the
        // Minkowski body cell + (-rP) is the hull of pairwise differences,
        // and basis coordinates are linear, so corners bound them.
        long imin = 0, imax = 0, jmin = 0, jmax = 0;
        bool first = true;
        for (const Pt<S>& c : cell) {
            for (const Pt<S>& q : pv) {
                Pt<S> d = sub(c, q);
                S ic = cross(d, b2) / det;
                S jc = cross(b1, d) / det;
                long il = ifloor(ic) - 1, ih = iceil(ic) + 1;
                long jl = ifloor(jc) - 1, jh = iceil(jc) + 1;
                if (first) { imin = il; imax = ih; jmin = jl; jmax = jh; first = false; }
                else {
                    imin = std::min(imin, il); imax = std::max(imax, ih);
                    jmin = std::min(jmin, jl); jmax = std::max(jmax, jh);
                }
            }
        }
        // Skewed unimodular cells (1/sqrt(y) by sqrt(y)) need about y
        // translates; far ones cost only a bbox rejection each.
        std::uint64_t count = static_cast<std::uint64_t>(imax - imin + 1) *
                              static_cast<std::uint64_t>(jmax - jmin + 1);
        if (count > 20'000'000ULL) throw budget_error("coverage: neighbor set too large");

        std::vector<Poly<S>> pieces{cell};
        std::vector<Poly<S>> next;
        Poly<S> shifted, inside, outside, rem;
        for (long i = imin; i <= imax && !pieces.empty(); ++i) {
            for (long j = jmin; j <= jmax && !pieces.empty(); ++j) {
                Pt<S> m{S(i) * b1[0] + S(j) * b2[0], S(i) * b1[1] + S(j) * b2[1]};
                shifted.clear();
                S xlo = m[0] + pv[0][0], xhi = xlo, ylo = m[1] + pv[0][1], yhi = ylo;
                for (const Pt<S>& q : pv) {
                    Pt<S> s{q[0] + m[0], q[1] + m[1]};
                    xlo = std::min(xlo, s[0]); xhi = std::max(xhi, s[0]);
                    ylo = std::min(ylo, s[1]); yhi = std::max(yhi, s[1]);
                    shifted.push_back(s);
                }
                next.clear();
                for (const Poly<S>& piece : pieces) {
                    if (bbox_disjoint(piece, xlo, xhi, ylo, yhi)) {
                        next.push_back(piece);
                        continue;
                    }
                    difference(piece, shifted, next, inside, outside, rem);
                }
                pieces.swap(next);
            }
        }
        if (pieces.empty()) return true;
        S total(0);
        for (const Poly<S>& p : pieces) total += area2(p);
        return total <= eps_total;
    }

private:
    static long ifloor(const S& v);
    static long iceil(const S& v);

    static bool bbox_disjoint(const Poly<S>& piece, const S& xlo, const S& xhi,
                              const S& ylo, const S& yhi) {
        bool allLeft = true, allRight = true, allBelow = true, allAbove = true;
        for (const Pt<S>& p : piece) {
            if (p[0] >= xlo) allLeft = false;
            if (p[0] <= xhi) allRight = false;
            if (p[1] >= ylo) allBelow = false;
            if (p[1] <= yhi) allAbove = false;
        }
        return allLeft || allRight || allBelow || allAbove;
    }

    // piece \ C appended to out as convex parts: peel the outside of each
    // edge half-plane of C in turn; what remains at the end is piece intersected with C.
    void difference(const Poly<S>& piece, const Poly<S>& C, std::vector<Poly<S>>& out,
                    Poly<S>& inside, Poly<S>& outside, Poly<S>& rem) const {
        rem = piece;
        const std::size_t n = C.size();
        for (std::size_t i = 0; i < n && rem.size() >= 3; ++i) {
            Pt<S> e = sub(C[(i + 1) % n], C[i]);
            split(rem, C[i], e, eps_side, inside, outside);
            if (outside.size() >= 3 && area2(outside) > eps_piece) out.push_back(outside);
            rem.swap(inside);
        }
    }
};

template <>
inline long Engine<mpq_class>::ifloor(const mpq_class& v) {
    mpz_class z;
    mpz_fdiv_q(z.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return z.get_si();
}
template <>
inline long Engine<mpq_class>::iceil(const mpq_class& v) {
    mpz_class z;
    mpz_cdiv_q(z.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return z.get_si();
}
template <>
inline long Engine<long double>::ifloor(const long double& v) {
    return static_cast<long>(std::floor(static_cast<double>(v)));
}
template <>
inline long Engine<long double>::iceil(const long double& v) {
    return static_cast<long>(std::ceil(static_cast<double>(v)));
}

} // namespace geo

namespace detail {

struct Basis2d {
    std::array<double, 2> b1, b2;
    double det; // > 0
};

inline Basis2d reduced_basis_2d(std::vector<std::vector<double>> rows) {
    size_reduce(rows);
    double det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0];
    if (det == 0.0) throw std::invalid_argument("covering_radius_2d: singular basis");
    if (det < 0) { std::swap(rows[0], rows[1]); det = -det; }
    return {{rows[0][0], rows[0][1]}, {rows[1][0], rows[1][1]}, det};
}

inline geo::Engine<long double> ld_engine(const Basis2d& b, double rmax) {
    geo::Engine<long double> eng;
    eng.b1 = {static_cast<long double>(b.b1[0]), static_cast<long double>(b.b1[1])};
    eng.b2 = {static_cast<long double>(b.b2[0]), static_cast<long double>(b.b2[1])};
    eng.det = geo::cross(eng.b1, eng.b2);
    long double scale = rmax;
    for (double v : {b.b1[0], b.b1[1], b.b2[0], b.b2[1]})
        scale = std::max(scale, static_cast<long double>(std::fabs(v)));
    scale = std::max(scale, 1.0L);
    // 1e-12 snapping on clip classification; the area thresholds sit just
    // above long-double noise so near-critical slivers stay visible.
    eng.eps_side = 1e-12L * scale * scale;
    eng.eps_piece = 1e-17L * scale * scale;
    eng.eps_total = 2e-15L * scale * scale;
    return eng;
}

inline geo::Engine<mpq_class> mpq_engine(const Basis2d& b) {
    geo::Engine<mpq_class> eng;
    eng.b1 = {mpq_class(b.b1[0]), mpq_class(b.b1[1])};
    eng.b2 = {mpq_class(b.b2[0]), mpq_class(b.b2[1])};
    eng.det = geo::cross(eng.b1, eng.b2);
    eng.eps_side = 0;
    eng.eps_piece = 0;
    eng.eps_total = 0;
    return eng;
}

inline bool ld_covered(const geo::Engine<long double>& eng, const Polytope2& P, long double r) {
    return eng.covered(P.vertices<long double>(r));
}

struct LdBracket {
    double lo, hi;
};

// Bisection bracket on the long-double engine.  Lower seed is the density
// bound (covol/vol P)^{1/2}; the upper bound doubles until covered.
inline LdBracket ld_bisect(const Basis2d& b, const Polytope2& P, double covol, double tol) {
    double r0 = std::sqrt(covol / P.volume());
    double hi = r0;
    for (int i = 0;; ++i) {
        auto eng = ld_engine(b, hi);
        if (ld_covered(eng, P, hi)) break;
        if (i > 60) throw budget_error("covering_radius_2d: no covering radius found");
        hi *= 2;
    }
    if (hi == r0) return {r0, r0};
    double lo = hi / 2 < r0 ? r0 * 0.999999 : hi / 2;
    auto eng = ld_engine(b, hi);
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        double mid = 0.5 * (lo + hi);
        (ld_covered(eng, P, mid) ? hi : lo) = mid;
    }
    return {lo, hi};
}

} // namespace detail

// rho(P, L) for a real lattice, floating path with 1e-12 snapping.
inline double covering_radius_2d(const RealLattice& lat, const Polytope2& P, double tol = 1e-9) {
    if (lat.k != 2) throw std::invalid_argument("covering_radius_2d: k must be 2");
    if (!(tol > 0)) throw std::invalid_argument("covering_radius_2d: tol must be positive");
    auto b = detail::reduced_basis_2d(lat.basis);
    auto br = detail::ld_bisect(b, P, b.det, tol);
    return 0.5 * (br.lo + br.hi);
}

// rho(P, L) for an integer lattice: the deciding coverage tests run in exact
// rational arithmetic on dyadic-rational radii.  A long-double pass seeds the
// bracket; both endpoints are then certified exactly (with a full exact
// fallback if certification fails), and exact bisection finishes to tol.
inline double covering_radius_2d(const IntegerLattice& lat, const Polytope2& P, double tol = 1e-9) {
    if (lat.k != 2) throw std::invalid_argument("covering_radius_2d: k must be 2");
    if (!(tol > 0)) throw std::invalid_argument("covering_radius_2d: tol must be positive");
    std::vector<std::vector<double>> rows(2, std::vector<double>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                static_cast<double>(lat.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    auto b = detail::reduced_basis_2d(rows);
    auto eng = detail::mpq_engine(b);
    auto covered_q = [&](const mpq_class& r) { return eng.covered(P.vertices<mpq_class>(r)); };

    double ldtol = std::max(tol * 0.25, 1e-9);
    auto br = detail::ld_bisect(b, P, b.det, ldtol);
    double r0 = std::sqrt(b.det / P.volume());

    mpq_class lo(std::max(br.lo - 4 * ldtol, r0 * (1 - 1e-9)));
    mpq_class hi(br.hi + 4 * ldtol);
    if (lo <= 0) lo = mpq_class(r0 * 0.5);
    if (!(!covered_q(lo) && covered_q(hi))) {
        // long-double seed was off; restart from the density bound
        lo = mpq_class(r0 * (1 - 1e-9));
        if (covered_q(lo)) return lo.get_d();
        hi = lo;
        int i = 0;
        do {
            hi *= 2;
            if (++i > 60) throw budget_error("covering_radius_2d: no covering radius found");
        } while (!covered_q(hi));
    }
    mpq_class qtol(tol);
    for (int i = 0; i < 200 && hi - lo > qtol; ++i) {
        mpq_class mid = (lo + hi) / 2;
        (covered_q(mid) ? hi : lo) = mid;
    }
    return mpq_class((lo + hi) / 2).get_d();
}

} // namespace ringlat
