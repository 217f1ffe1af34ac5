#pragma once

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "ringlat/empirical.hpp"
#include "ringlat/ensemble.hpp"
#include "ringlat/errors.hpp"
#include "ringlat/lattice.hpp"
#include "ringlat/rings.hpp"

namespace ringlat {

// Scaled per-tuple statistics.  All are divided by Pi^{1/k} with
// Pi = n l_1...l_k (the moment statistic by Pi^{alpha/k}); the shifted
// variant adds e.l to the directed diameter before scaling.
enum class Statistic {
    diam_directed,
    diam_directed_shifted,
    diam_undirected,
    scl_directed,
    scl_undirected,
    moment,
};

inline Statistic parse_statistic(const std::string& s) {
    if (s == "diam_directed") return Statistic::diam_directed;
    if (s == "diam_directed_shifted") return Statistic::diam_directed_shifted;
    if (s == "diam_undirected") return Statistic::diam_undirected;
    if (s == "scl_directed") return Statistic::scl_directed;
    if (s == "scl_undirected") return Statistic::scl_undirected;
    if (s == "moment") return Statistic::moment;
    throw std::invalid_argument("unknown statistic: " + s);
}

inline std::string statistic_name(Statistic s) {
    switch (s) {
        case Statistic::diam_directed: return "diam_directed";
        case Statistic::diam_directed_shifted: return "diam_directed_shifted";
        case Statistic::diam_undirected: return "diam_undirected";
        case Statistic::scl_directed: return "scl_directed";
        case Statistic::scl_undirected: return "scl_undirected";
        case Statistic::moment: return "moment";
    }
    return "?";
}

inline bool statistic_undirected(Statistic s) {
    return s == Statistic::diam_undirected || s == Statistic::scl_undirected;
}

struct ExperimentConfig {
    int k = 2;
    std::string domain = "fplus"; // fplus | f
    double cap = 1.0;
    double T = 1000.0;
    std::int64_t samples = 1;
    std::uint64_t seed = 1;
    Statistic statistic = Statistic::diam_directed_shifted;
    int moment_alpha = 1;
    LengthModel length_model{LengthKind::unit, {}};
    int threads = 0; // 0 = default (env RINGLAT_THREADS or hardware)
};

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("RINGLAT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// The statistic of one sampled tuple.  The frobenius length model computes
// on integer lengths a and applies its 1/n scale afterwards, so the integer
// shortest-path arithmetic stays exact.  With effective lengths
// scale * values, the scale cancels between the raw statistic and
// Pi_eff^{1/k} = pi_raw^{1/k} * scale, so the quotient uses raw values only.
inline double evaluate_statistic(const ExperimentConfig& cfg, const Tuple& t) {
    Lengths len = lengths_for(cfg.length_model, t);
    const int k = static_cast<int>(t.a.size());
    // moment follows the domain's orientation; the other statistics pin it
    bool undirected = statistic_undirected(cfg.statistic) ||
                      (cfg.statistic == Statistic::moment && cfg.domain == "f");
    double pi_raw = static_cast<double>(t.n);
    double el_raw = 0.0;
    for (double l : len.values) { pi_raw *= l; el_raw += l; }
    double value_raw;
    switch (cfg.statistic) {
        case Statistic::diam_directed:
        case Statistic::diam_directed_shifted:
        case Statistic::diam_undirected: {
            CirculantSpec spec = build_circulant(t.n, t.a, len.values, !undirected);
            value_raw = diameter(spec);
            if (cfg.statistic == Statistic::diam_directed_shifted) value_raw += el_raw;
            break;
        }
        case Statistic::scl_directed: {
            CirculantSpec spec = build_circulant(t.n, t.a, len.values, true);
            value_raw = scl_directed(spec);
            break;
        }
        case Statistic::scl_undirected: {
            // shortest nontrivial cycle: min over nonzero kernel vectors of
            // the weighted l1 value
            IntegerLattice lam = kernel_lattice(t.a, t.n);
            value_raw = shortest_weighted_l1(lam, len.values).second;
            break;
        }
        case Statistic::moment: {
            CirculantSpec spec = build_circulant(t.n, t.a, len.values, !undirected);
            double m = moment(distance_profile(spec), cfg.moment_alpha);
            return m / std::pow(pi_raw, static_cast<double>(cfg.moment_alpha) / k);
        }
        default:
            throw std::logic_error("evaluate_statistic: bad statistic");
    }
    return value_raw / std::pow(pi_raw, 1.0 / k);
}

// Unsorted per-index statistic values.  Work-stealing over sample indices;
// sample i derives everything from substream(seed, i), so the output is
// identical for every thread count.
inline std::vector<double> run_experiment_values(const ExperimentConfig& cfg) {
    if (cfg.samples < 1) throw std::invalid_argument("run_experiment: samples must be >= 1");
    if (!(cfg.T >= cfg.k + 1)) throw std::invalid_argument("run_experiment: need T >= k+1");
    bool undirected = statistic_undirected(cfg.statistic);
    DomainSpec D = domain_by_name(cfg.domain, cfg.k, cfg.cap);
    if (undirected && D.kind != DomainKind::f_cap)
        throw std::invalid_argument("run_experiment: undirected statistics require the f domain");
    if (cfg.length_model.kind == LengthKind::fixed &&
        static_cast<int>(cfg.length_model.fixed.size()) != cfg.k)
        throw std::invalid_argument("run_experiment: fixed length vector must have k entries");

    std::vector<double> values(static_cast<std::size_t>(cfg.samples));
    const int nthreads = resolve_threads(cfg.threads);
    std::atomic<std::int64_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mu;

    auto worker = [&]() {
        for (;;) {
            std::int64_t i = next.fetch_add(1);
            if (i >= cfg.samples || failed.load()) return;
            Tuple t;
            try {
                SplitMix64 rng = substream(cfg.seed, static_cast<std::uint64_t>(i));
                t = sample_one(D, cfg.T, rng);
                values[static_cast<std::size_t>(i)] = evaluate_statistic(cfg, t);
            } catch (const std::exception& e) {
                // attach the offending tuple (empty if sampling itself failed)
                std::string where = " [sample " + std::to_string(i);
                if (t.n != 0) {
                    where += ", a=(";
                    for (std::size_t j = 0; j < t.a.size(); ++j)
                        where += (j ? "," : "") + std::to_string(t.a[j]);
                    where += "), n=" + std::to_string(t.n);
                }
                where += "]";
                std::lock_guard<std::mutex> lk(error_mu);
                if (!failed.exchange(true)) {
                    if (dynamic_cast<const budget_error*>(&e))
                        error = std::make_exception_ptr(budget_error(e.what() + where));
                    else
                        error = std::make_exception_ptr(std::invalid_argument(e.what() + where));
                }
                return;
            }
        }
    };
    if (nthreads <= 1 || cfg.samples == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) std::rethrow_exception(error);
    return values;
}

inline EmpiricalDistribution run_experiment(const ExperimentConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<double> values = run_experiment_values(cfg);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    std::map<std::string, std::string> meta{
        {"k", std::to_string(cfg.k)},
        {"domain", cfg.domain},
        {"cap", format_double(cfg.cap)},
        {"T", format_double(cfg.T)},
        {"samples", std::to_string(cfg.samples)},
        {"seed", std::to_string(cfg.seed)},
        {"statistic", statistic_name(cfg.statistic)},
        {"lengths", length_model_name(cfg.length_model)},
        {"wall_ms", format_double(ms)},
    };
    if (cfg.statistic == Statistic::moment) meta["alpha"] = std::to_string(cfg.moment_alpha);
    return make_empirical(std::move(values), std::move(meta));
}

// Frobenius number of {a_1,...,a_k, n} via the diameter identity
// F = diam C_n^+(l = a, a) - n, exact integer arithmetic throughout.
inline std::int64_t frobenius(const std::vector<std::int64_t>& a, std::int64_t n) {
    std::int64_t g = n;
    for (std::int64_t ai : a) {
        if (ai <= 0 || ai >= n) throw std::invalid_argument("frobenius: need 0 < a_i < n");
        g = std::gcd(g, ai);
    }
    if (g != 1) throw std::invalid_argument("frobenius: gcd(a, n) must be 1");
    std::vector<double> lengths(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) lengths[i] = static_cast<double>(a[i]);
    CirculantSpec spec = build_circulant(n, a, lengths, true);
    std::uint64_t diam = diameter_exact(distance_profile(spec));
    return static_cast<std::int64_t>(diam) - n;
}

} // namespace ringlat
