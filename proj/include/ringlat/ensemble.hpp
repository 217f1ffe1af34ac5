#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringlat/errors.hpp"
#include "ringlat/quadrature.hpp"
#include "ringlat/rng.hpp"

namespace ringlat {

// Parameter domains D for the tuple ensembles.  The built-ins are the
// cone of ordered positive coordinates 0 < x_1 < ... < x_k < x_{k+1} capped
// at x_{k+1} <= c (directed case), and its undirected restriction
// x_k <= x_{k+1}/2 (non-strict, admitting a_k = n/2).
enum class DomainKind { fplus_cap, f_cap, custom };

struct DomainSpec {
    int k = 2;
    DomainKind kind = DomainKind::fplus_cap;
    double cap = 1.0;
    std::optional<double> exact_volume;
    // For custom domains: membership on D-space coordinates, plus a bounding
    // box (per-coordinate upper bounds; lower bounds are 0).
    std::function<bool(const std::vector<double>&)> member;
    std::vector<double> box_hi;

    bool undirected() const { return kind == DomainKind::f_cap; }
};

inline DomainSpec fplus_cap(int k, double cap = 1.0) {
    if (k < 1 || !(cap > 0)) throw std::invalid_argument("fplus_cap: need k >= 1, cap > 0");
    DomainSpec d;
    d.k = k;
    d.kind = DomainKind::fplus_cap;
    d.cap = cap;
    double kfact1 = 1.0;
    for (int i = 2; i <= k + 1; ++i) kfact1 *= i;
    d.exact_volume = std::pow(cap, k + 1) / kfact1;
    d.box_hi.assign(static_cast<std::size_t>(k) + 1, cap);
    return d;
}

inline DomainSpec f_cap(int k, double cap = 1.0) {
    DomainSpec d = fplus_cap(k, cap);
    d.kind = DomainKind::f_cap;
    *d.exact_volume /= std::pow(2.0, k);
    return d;
}

inline DomainSpec custom_domain(int k, std::function<bool(const std::vector<double>&)> member,
                                std::vector<double> box_hi, std::optional<double> volume = std::nullopt) {
    if (k < 1 || static_cast<int>(box_hi.size()) != k + 1)
        throw std::invalid_argument("custom_domain: need k >= 1 and k+1 box bounds");
    DomainSpec d;
    d.k = k;
    d.kind = DomainKind::custom;
    d.cap = 0;
    d.exact_volume = volume;
    d.member = std::move(member);
    d.box_hi = std::move(box_hi);
    return d;
}

inline DomainSpec domain_by_name(const std::string& name, int k, double cap = 1.0) {
    if (name == "fplus") return fplus_cap(k, cap);
    if (name == "f") return f_cap(k, cap);
    throw std::invalid_argument("unknown domain (use fplus or f): " + name);
}

struct Tuple {
    std::vector<std::int64_t> a;
    std::int64_t n = 0;
};

namespace detail {

inline bool tuple_in_dilated_domain(const DomainSpec& D, double T,
                                    const std::vector<std::int64_t>& pt) {
    const int k = D.k;
    if (D.kind == DomainKind::custom) {
        std::vector<double> x(pt.size());
        for (std::size_t i = 0; i < pt.size(); ++i) x[i] = static_cast<double>(pt[i]) / T;
        return D.member(x);
    }
    for (int i = 0; i + 1 <= k; ++i)
        if (!(pt[static_cast<std::size_t>(i)] < pt[static_cast<std::size_t>(i) + 1])) return false;
    if (pt[0] <= 0) return false;
    if (static_cast<double>(pt[static_cast<std::size_t>(k)]) > T * D.cap) return false;
    if (D.kind == DomainKind::f_cap && 2 * pt[static_cast<std::size_t>(k) - 1] > pt[static_cast<std::size_t>(k)])
        return false;
    return true;
}

inline bool coprime(const std::vector<std::int64_t>& pt) {
    std::int64_t g = 0;
    for (std::int64_t v : pt) g = std::gcd(g, v);
    return g == 1;
}

} // namespace detail

// One uniform sample from the integer points of T*D with coprime
// coordinates, by rejection from the integer bounding box.  The attempt cap
// corresponds to an acceptance rate of about 1e-6.
inline Tuple sample_one(const DomainSpec& D, double T, SplitMix64& rng) {
    const int d = D.k + 1;
    std::vector<std::uint64_t> hi(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        double h = std::floor(T * D.box_hi[static_cast<std::size_t>(i)]);
        if (h < 1) throw budget_error("sample_one: dilated domain contains no integer points");
        hi[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(h);
    }
    std::vector<std::int64_t> pt(static_cast<std::size_t>(d));
    for (std::int64_t attempt = 0; attempt < 10'000'000; ++attempt) {
        for (int i = 0; i < d; ++i)
            pt[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rng.next_in(hi[static_cast<std::size_t>(i)]));
        if (!detail::tuple_in_dilated_domain(D, T, pt)) continue;
        if (!detail::coprime(pt)) continue;
        Tuple t;
        t.a.assign(pt.begin(), pt.end() - 1);
        t.n = pt.back();
        return t;
    }
    throw budget_error("sample_one: acceptance rate below 1e-6 (domain/T mismatch)");
}

// Deterministic i.i.d. sample list; sample i uses substream(seed, i), so any
// parallel scheduler reproduces the same list.
inline std::vector<Tuple> sample_tuples(const DomainSpec& D, double T, std::int64_t count,
                                        std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample_tuples: count must be >= 1");
    std::vector<Tuple> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        SplitMix64 rng = substream(seed, static_cast<std::uint64_t>(i));
        out.push_back(sample_one(D, T, rng));
    }
    return out;
}

// Exact cardinality of the coprime integer points of T*D by enumeration.
// Guarded by the raw bounding-box budget of 1e8 candidate points.
inline std::int64_t count_tuples(const DomainSpec& D, double T) {
    const int d = D.k + 1;
    double cells = 1;
    std::vector<std::int64_t> hi(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        hi[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(std::floor(T * D.box_hi[static_cast<std::size_t>(i)]));
        cells *= std::max<double>(1.0, static_cast<double>(hi[static_cast<std::size_t>(i)]));
    }
    if (cells > 1e8) throw budget_error("count_tuples: bounding box exceeds 1e8 candidates");

    std::vector<std::int64_t> pt(static_cast<std::size_t>(d));
    std::int64_t count = 0;
    // Ordered loops for the built-ins; plain box loops for custom domains.
    std::function<void(int)> rec = [&](int depth) {
        if (depth == d) {
            if (detail::tuple_in_dilated_domain(D, T, pt) && detail::coprime(pt)) ++count;
            return;
        }
        std::int64_t lo = 1;
        if (D.kind != DomainKind::custom && depth > 0) lo = pt[static_cast<std::size_t>(depth) - 1] + 1;
        for (std::int64_t v = lo; v <= hi[static_cast<std::size_t>(depth)]; ++v) {
            pt[static_cast<std::size_t>(depth)] = v;
            rec(depth + 1);
        }
    };
    rec(0);
    return count;
}

// vol(D) T^{k+1} / zeta(k+1): the leading term of the tuple count.
inline double asymptotic_count(const DomainSpec& D, double T) {
    if (!D.exact_volume) throw std::invalid_argument("asymptotic_count: domain volume unknown");
    return *D.exact_volume * std::pow(T, D.k + 1) / zeta(D.k + 1);
}

// --- length models ------------------------------------------------------------

enum class LengthKind { unit, fixed, frobenius };

struct LengthModel {
    LengthKind kind = LengthKind::unit;
    std::vector<double> fixed;
};

// Effective edge lengths are scale * values; the split keeps the frobenius
// model (l_h = a_h / n) integer-exact: values = a, scale = 1/n.
struct Lengths {
    std::vector<double> values;
    double scale = 1.0;
};

inline Lengths lengths_for(const LengthModel& model, const Tuple& t) {
    switch (model.kind) {
        case LengthKind::unit:
            return {std::vector<double>(t.a.size(), 1.0), 1.0};
        case LengthKind::fixed:
            if (model.fixed.size() != t.a.size())
                throw std::invalid_argument("lengths_for: fixed length vector has wrong dimension");
            return {model.fixed, 1.0};
        case LengthKind::frobenius: {
            std::vector<double> v(t.a.size());
            for (std::size_t i = 0; i < t.a.size(); ++i) v[i] = static_cast<double>(t.a[i]);
            return {v, 1.0 / static_cast<double>(t.n)};
        }
    }
    throw std::logic_error("lengths_for: bad model");
}

inline LengthModel parse_length_model(const std::string& s) {
    if (s == "unit") return {LengthKind::unit, {}};
    if (s == "frobenius") return {LengthKind::frobenius, {}};
    if (s.rfind("fixed:", 0) == 0) {
        LengthModel m{LengthKind::fixed, {}};
        std::stringstream ss(s.substr(6));
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            m.fixed.push_back(std::stod(item));
        }
        if (m.fixed.empty()) throw std::invalid_argument("fixed length model needs values: fixed:v1,v2,...");
        for (double v : m.fixed)
            if (!(v > 0)) throw std::invalid_argument("fixed lengths must be positive");
        return m;
    }
    throw std::invalid_argument("unknown length model (unit, fixed:<v1,...>, frobenius): " + s);
}

inline std::string length_model_name(const LengthModel& m) {
    switch (m.kind) {
        case LengthKind::unit: return "unit";
        case LengthKind::frobenius: return "frobenius";
        case LengthKind::fixed: {
            std::ostringstream os;
            os << "fixed:";
            for (std::size_t i = 0; i < m.fixed.size(); ++i) {
                if (i) os << ',';
                os << m.fixed[i];
            }
            return os.str();
        }
    }
    return "?";
}

} // namespace ringlat
