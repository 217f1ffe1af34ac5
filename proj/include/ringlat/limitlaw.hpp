#pragma once

// Closed-form limit laws for k = 2 and the Haar sampler on the space of
// unimodular 2-d lattices.
//
// The four densities below are the limit distributions of the scaled metric
// invariants of random circulant (di)graphs:
//   p2           scaled directed diameter  (support [sqrt(3), inf))
//   tilde_p2     scaled undirected diameter (support [1/sqrt(2), inf))
//   p2_scl       scaled directed shortest cycle length (support [0, inf))
//   tilde_p2_scl scaled undirected shortest cycle length (support [0, sqrt(2)])
// Each equals the distribution of the corresponding lattice functional
// (covering radius of the simplex / cross-polytope, or shortest vector in
// the positive cone / l1 norm) of a Haar-random unimodular lattice.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringlat/coverage.hpp"
#include "ringlat/empirical.hpp"
#include "ringlat/lattice.hpp"
#include "ringlat/quadrature.hpp"
#include "ringlat/rng.hpp"

namespace ringlat {

inline constexpr double kPi = std::numbers::pi;

// Density of the scaled directed diameter, k = 2.  Three branches: zero up
// to sqrt(3), an algebraic arc on [sqrt(3), 2], and an arccos/log tail.
// The tail is evaluated in a cancellation-free form: with u = R^-2, the
// arccos argument equals 1 - delta where
//   delta = 3u^2 / ((sqrt(1-3u)+sqrt(1-4u))(1+sqrt(1-3u))(1+sqrt(1-4u)) sqrt(1-3u)),
// and acos(1-delta) = 2 asin(sqrt(delta/2)); the log becomes
// log1p(-1/(R^2-3)).  The naive formula loses everything beyond R ~ 1e3
// because the two terms cancel to O(R^-3).
inline double p2(double R) {
    if (R < 0) throw std::invalid_argument("p2: R must be >= 0");
    const double s3 = std::sqrt(3.0);
    if (R <= s3) return 0.0;
    if (R <= 2.0) return (12.0 / kPi) * (R / s3 - std::sqrt(4.0 - R * R));
    double u = 1.0 / (R * R);
    double s3u = std::sqrt(1.0 - 3.0 * u);
    double s4u = std::sqrt(1.0 - 4.0 * u);
    double delta = 12.0 * u * u / ((s3u + s4u) * (1.0 + s3u) * (1.0 + s4u)) / (4.0 * s3u);
    double ac = 2.0 * std::asin(std::sqrt(0.5 * delta));
    double r4 = R * s4u;
    double lg = std::log1p(-1.0 / (R * R - 3.0));
    return (12.0 / (kPi * kPi)) * (R * s3 * ac + 1.5 * r4 * lg);
}

// Density of the scaled undirected diameter, k = 2.  The log factors have
// removable singularities at R = 1/sqrt(2) and R = 1; both terms tend to 0
// there, so arguments below 1e-12 are evaluated by their limits.
inline double tilde_p2(double R) {
    if (R < 0) throw std::invalid_argument("tilde_p2: R must be >= 0");
    if (R * R <= 0.5) return 0.0;
    double t = 2.0 * R * R - 1.0;
    double u = 1.0 - R * R;
    // log(2R^2 / (2R^2-1)) = -log1p(-1/(2R^2)): exact and stable for large R,
    // where the two terms cancel to O(R^-3)
    double term1 = t < 1e-12 ? 0.0 : -(t / R) * std::log1p(-1.0 / (2.0 * R * R));
    double term2;
    if (std::fabs(u) < 1e-12) {
        term2 = 0.0; // removable singularity at R = 1
    } else if (R > 1.0) {
        term2 = ((R * R - 1.0) / R) * std::log1p(-1.0 / (R * R));
    } else {
        term2 = (u / R) * std::log(R * R / u);
    }
    return (24.0 / (kPi * kPi)) * (term1 + term2);
}

// Density of the scaled directed shortest cycle length, k = 2.  The tail
// branch uses sqrt(R^2-4) - R = -4/(R + sqrt(R^2-4)) and
// log((1+s)/2) = log1p(-(1-s)/2) with s = sqrt(1-4/R^2), again to keep the
// O(R^-3) result out of the rounding noise of O(R) terms.
inline double p2_scl(double R) {
    if (R < 0) throw std::invalid_argument("p2_scl: R must be >= 0");
    const double c = 6.0 / (kPi * kPi);
    if (R <= 1.0) return c * R;
    if (R <= 2.0) return c * (2.0 / R * (1.0 + 2.0 * std::log(R)) - R);
    double w = 4.0 / (R * R);
    double s = std::sqrt(1.0 - w);
    double sqrt_minus_R = -4.0 / (R + std::sqrt(R * R - 4.0));
    double lg = std::log1p(-0.5 * w / (1.0 + s));
    return c * (2.0 / R + sqrt_minus_R - 4.0 / R * lg);
}

// Density of the scaled undirected shortest cycle length, k = 2.
inline double tilde_p2_scl(double R) {
    if (R < 0) throw std::invalid_argument("tilde_p2_scl: R must be >= 0");
    const double c = 12.0 / (kPi * kPi);
    if (R <= 1.0) return c * R;
    double u = 2.0 - R * R;
    if (u < 1e-12) return 0.0;
    return c * (u / R) * (1.0 + std::log(R * R / u));
}

// Leading tail terms of the complementary distribution functions:
// P_k(R) ~ (k+1) / (2 zeta(k)) R^{-k},  P~_k(R) ~ R^{-k} / (2 zeta(k)).
inline double tail_Pk(double R, int k) {
    if (!(R > 0) || k < 2) throw std::invalid_argument("tail_Pk: need R > 0, k >= 2");
    return (k + 1) / (2.0 * zeta(k)) * std::pow(R, -k);
}

inline double tail_tildePk(double R, int k) {
    if (!(R > 0) || k < 2) throw std::invalid_argument("tail_tildePk: need R > 0, k >= 2");
    return std::pow(R, -k) / (2.0 * zeta(k));
}

// Support endpoints and lower-bound constants.  For k = 2 both infima are
// known exactly (sqrt(3), 1/sqrt(2)); for k >= 3 only the covering-density
// bounds are available, and the undirected bound is strict (no tessellation
// of R^k by cross-polytopes exists for k >= 3).
struct SupportConstants {
    std::optional<double> directed_support_lo;   // k = 2 only
    std::optional<double> undirected_support_lo; // k = 2 only
    double directed_lower_bound;                 // (k!)^{1/k}, always strict
    double undirected_lower_bound;               // (k!)^{1/k} / 2
    bool directed_bound_strict;
    bool undirected_bound_strict;
};

inline SupportConstants support_constants(int k) {
    if (k < 2) throw std::invalid_argument("support_constants: k must be >= 2");
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    SupportConstants s;
    s.directed_lower_bound = std::pow(fact, 1.0 / k);
    s.undirected_lower_bound = 0.5 * s.directed_lower_bound;
    s.directed_bound_strict = true;
    s.undirected_bound_strict = (k >= 3);
    if (k == 2) {
        s.directed_support_lo = std::sqrt(3.0);
        s.undirected_support_lo = 1.0 / std::sqrt(2.0);
    }
    return s;
}

// A density/CDF pair with its support and branch points.  The CDF is
// quadrature-backed: cumulative integrals at branch points are cached at
// construction (splitting exactly there keeps the adaptive rule accurate),
// and evaluation integrates only within one segment.
class LimitLaw {
public:
    LimitLaw(std::string name, double support_lo, double support_hi,
             std::function<double(double)> density, std::vector<double> breakpoints,
             double tail_exponent)
        : name_(std::move(name)),
          support_lo_(support_lo),
          support_hi_(support_hi),
          density_(std::move(density)),
          tail_exponent_(tail_exponent) {
        knots_.push_back(support_lo_);
        for (double b : breakpoints)
            if (b > support_lo_ && (b < support_hi_)) knots_.push_back(b);
        if (std::isfinite(support_hi_)) knots_.push_back(support_hi_);
        cum_.assign(knots_.size(), 0.0);
        for (std::size_t i = 1; i < knots_.size(); ++i)
            cum_[i] = cum_[i - 1] + integrate(density_, knots_[i - 1], knots_[i], 1e-10);
    }

    const std::string& name() const { return name_; }
    double support_lo() const { return support_lo_; }
    double support_hi() const { return support_hi_; }
    double tail_exponent() const { return tail_exponent_; }
    double density(double R) const { return R < 0 ? 0.0 : density_(R); }

    double cdf(double R) const {
        if (R <= support_lo_) return 0.0;
        if (std::isfinite(support_hi_) && R >= support_hi_) return 1.0;
        std::size_t seg = 0;
        while (seg + 1 < knots_.size() && knots_[seg + 1] <= R) ++seg;
        return cum_[seg] + integrate(density_, knots_[seg], R, 1e-10);
    }

    // CDF at each entry of an ascending sequence; integrates increments only.
    std::vector<double> cdf_sorted(const std::vector<double>& sorted) const {
        std::vector<double> out(sorted.size());
        double prev_x = support_lo_, acc = 0.0;
        std::size_t seg = 0;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            double x = sorted[i];
            if (i > 0 && x < sorted[i - 1]) throw std::invalid_argument("cdf_sorted: input not sorted");
            if (x <= support_lo_) { out[i] = 0.0; continue; }
            if (std::isfinite(support_hi_) && x >= support_hi_) { out[i] = 1.0; prev_x = support_hi_; acc = 1.0; continue; }
            // advance across knots so each integrate() call stays inside a branch
            while (seg + 1 < knots_.size() && knots_[seg + 1] <= x) {
                if (knots_[seg + 1] > prev_x) acc += integrate(density_, std::max(prev_x, knots_[seg]), knots_[seg + 1], 1e-11);
                prev_x = knots_[seg + 1];
                ++seg;
            }
            if (x > prev_x) {
                acc += integrate(density_, prev_x, x, 1e-11);
                prev_x = x;
            }
            out[i] = std::min(acc, 1.0);
        }
        return out;
    }

    // Total mass by quadrature (tail mapped to [0,1) when the support is
    // infinite); equals 1 within 1e-6 for all four laws.
    double total_mass() const {
        double m = cum_.back();
        if (!std::isfinite(support_hi_)) m += integrate_tail(density_, knots_.back(), 1e-10);
        return m;
    }

private:
    std::string name_;
    double support_lo_, support_hi_;
    std::function<double(double)> density_;
    double tail_exponent_;
    std::vector<double> knots_;
    std::vector<double> cum_;
};

inline LimitLaw limit_law(const std::string& name) {
    const double inf = std::numeric_limits<double>::infinity();
    if (name == "p2")
        return LimitLaw("p2", std::sqrt(3.0), inf, [](double R) { return p2(R); }, {2.0}, 2.0);
    if (name == "tilde_p2")
        return LimitLaw("tilde_p2", 1.0 / std::sqrt(2.0), inf, [](double R) { return tilde_p2(R); }, {1.0}, 2.0);
    if (name == "p2_scl")
        return LimitLaw("p2_scl", 0.0, inf, [](double R) { return p2_scl(R); }, {1.0, 2.0}, 2.0);
    if (name == "tilde_p2_scl")
        return LimitLaw("tilde_p2_scl", 0.0, std::sqrt(2.0), [](double R) { return tilde_p2_scl(R); }, {1.0}, 0.0);
    throw std::invalid_argument("limit_law: unknown law " + name);
}

// --- Haar sampling on the space of unimodular 2-d lattices -------------------

// Iwasawa coordinates (x, y, phi): basis = Z^2 . n(x) a(y) k(phi) with
//   n(x) = [[1,x],[0,1]], a(y) = diag(sqrt(y), 1/sqrt(y)), k(phi) = rotation.
// The invariant probability measure is (3/pi^2) y^{-2} dx dy dphi on the
// fundamental domain {|x| <= 1/2, x^2 + y^2 >= 1} x [0, pi).  Sampling is by
// inverse CDF throughout: the x-marginal is (3/pi)(1-x^2)^{-1/2}, so
// x = sin(theta) with theta uniform on [-pi/6, pi/6]; given x, y has density
// proportional to y^{-2} on [sqrt(1-x^2), inf), i.e. y = y_min / (1 - U).
inline RealLattice haar_lattice_x2(SplitMix64& rng) {
    double theta = (rng.next_double() - 0.5) * (kPi / 3.0);
    double x = std::sin(theta);
    double ymin = std::cos(theta); // sqrt(1 - x^2) >= sqrt(3)/2
    double y = ymin / (1.0 - rng.next_double());
    double phi = kPi * rng.next_double();
    double sy = std::sqrt(y), c = std::cos(phi), s = std::sin(phi);
    // rows of n(x) a(y) k(phi)
    RealLattice L;
    L.k = 2;
    L.basis = {{sy * c + (x / sy) * s, -sy * s + (x / sy) * c},
               {(1.0 / sy) * s, (1.0 / sy) * c}};
    L.covolume = 1.0;
    return L;
}

inline std::vector<RealLattice> haar_sample_x2(std::int64_t count, std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("haar_sample_x2: count must be >= 1");
    std::vector<RealLattice> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(i));
        out.push_back(haar_lattice_x2(rng));
    }
    return out;
}

// Monte Carlo sample of the defining lattice statistic of a k = 2 limit law:
// rho(simplex, L), rho(cross-polytope, L), the shortest positive-cone vector
// value, or the shortest l1 norm, over Haar-random L.
inline EmpiricalDistribution mc_limit_estimate(const std::string& law, std::int64_t count,
                                               std::uint64_t seed, double rho_tol = 1e-6) {
    if (count < 1) throw std::invalid_argument("mc_limit_estimate: count must be >= 1");
    enum class Stat { rho_simplex, rho_cross, scl_dir, scl_undir } stat;
    if (law == "p2") stat = Stat::rho_simplex;
    else if (law == "tilde_p2") stat = Stat::rho_cross;
    else if (law == "p2_scl") stat = Stat::scl_dir;
    else if (law == "tilde_p2_scl") stat = Stat::scl_undir;
    else throw std::invalid_argument("mc_limit_estimate: unknown law " + law);

    const std::vector<double> unit{1.0, 1.0};
    std::vector<double> vals(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(i));
        RealLattice L = haar_lattice_x2(rng);
        double v = 0;
        switch (stat) {
            case Stat::rho_simplex: v = covering_radius_2d(L, Polytope2::simplex(), rho_tol); break;
            case Stat::rho_cross: v = covering_radius_2d(L, Polytope2::crosspolytope(), rho_tol); break;
            case Stat::scl_dir: v = shortest_nonneg(L, unit); break;
            case Stat::scl_undir: v = shortest_weighted_l1(L, unit).second; break;
        }
        vals[static_cast<std::size_t>(i)] = v;
    }
    return make_empirical(std::move(vals), {{"law", law},
                                            {"seed", std::to_string(seed)},
                                            {"samples", std::to_string(count)}});
}

// (6/pi^2) * integral over {(a,b,g) in (0,1)^3 : b+g > 1} of
// ((1-a)b + ag)^{-2}; equals 1 (the two parameter charts together have full
// Haar measure).  delta is linear in alpha, so its alpha-integral over [0,1]
// is exactly 1/(delta(0) delta(1)); beta and gamma are integrated
// numerically over the chart region {beta + gamma > 1}.
inline double omega_measure_quadrature(double tol = 1e-6) {
    auto inner = [tol](double gamma) {
        return integrate(
            [gamma](double beta) {
                double d0 = omega_delta(0.0, beta, gamma);
                double d1 = omega_delta(1.0, beta, gamma);
                return 1.0 / (d0 * d1);
            },
            1.0 - gamma, 1.0, tol * 0.05);
    };
    double I = integrate(inner, 0.0, 1.0, tol * 0.2);
    return 6.0 / (kPi * kPi) * I;
}

} // namespace ringlat
