// Command-line driver: exact metric invariants of circulant graphs, tuple
// ensembles, limit-law densities, and the scaled-statistic experiments.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "ringlat/ringlat.hpp"

namespace {

using namespace ringlat;

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoll(item));
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::vector<double> parse_double_list(const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stod(item));
    return out;
}

struct GlobalOpts {
    int k = 2;
    std::string domain = "fplus";
    double cap = 1.0;
    double T = 1000.0;
    std::int64_t samples = 1000;
    std::uint64_t seed = 1;
    std::string lengths = "unit";
    int threads = 0;
    std::string out;
    std::string format = "csv";
    std::string config;
};

void write_or_print(const std::string& payload, const std::string& path) {
    if (path.empty()) {
        std::fputs(payload.c_str(), stdout);
    } else {
        write_file(path, payload);
    }
}

void emit_empirical(const EmpiricalDistribution& emp, const GlobalOpts& g) {
    if (g.format == "json") {
        write_or_print(to_json(emp).dump(2) + "\n", g.out);
    } else {
        write_or_print(to_csv(emp), g.out);
    }
}

// Flags win over --config values; config wins over built-in defaults.
void apply_config_defaults(CLI::App& app, GlobalOpts& g) {
    if (g.config.empty()) return;
    std::ifstream in(g.config);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + g.config);
    nlohmann::json j;
    in >> j;
    auto maybe = [&](const char* key, auto& slot) {
        using T = std::decay_t<decltype(slot)>;
        if (j.contains(key) && app.count(std::string("--") + key) == 0) slot = j.at(key).get<T>();
    };
    maybe("k", g.k);
    maybe("domain", g.domain);
    maybe("cap", g.cap);
    maybe("T", g.T);
    maybe("samples", g.samples);
    maybe("seed", g.seed);
    maybe("lengths", g.lengths);
    maybe("threads", g.threads);
    maybe("out", g.out);
    maybe("format", g.format);
}

int run(int argc, char** argv) {
    CLI::App app{"circulant graph metric invariants and their limit laws"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    GlobalOpts g;
    app.add_option("--k", g.k, "number of generators");
    app.add_option("--domain", g.domain, "parameter domain: fplus | f");
    app.add_option("--cap", g.cap, "domain cap c (x_{k+1} <= c)");
    app.add_option("--T", g.T, "dilation parameter");
    app.add_option("--samples", g.samples, "sample count");
    app.add_option("--seed", g.seed, "RNG seed");
    app.add_option("--lengths", g.lengths, "length model: unit | fixed:<v1,...> | frobenius");
    app.add_option("--threads", g.threads, "worker threads (0 = auto, env RINGLAT_THREADS)");
    app.add_option("--out", g.out, "output path (default stdout)");
    app.add_option("--format", g.format, "output format: csv | json");
    app.add_option("--config", g.config, "JSON config file (flags take precedence)");

    // single-instance commands
    std::string a_str;
    std::int64_t n = 0;
    bool directed = false;
    int alpha = 1;

    auto* c_diam = app.add_subcommand("diam", "diameter of one circulant (di)graph");
    c_diam->add_option("--n", n, "vertex count")->required();
    c_diam->add_option("--a", a_str, "generators a1,a2,...")->required();
    c_diam->add_flag("--directed", directed, "directed graph");

    auto* c_scl = app.add_subcommand("scl", "shortest cycle length of one circulant (di)graph");
    c_scl->add_option("--n", n, "vertex count")->required();
    c_scl->add_option("--a", a_str, "generators a1,a2,...")->required();
    c_scl->add_flag("--directed", directed, "directed graph");

    auto* c_mom = app.add_subcommand("moments", "distance moments of one circulant (di)graph");
    c_mom->add_option("--n", n, "vertex count")->required();
    c_mom->add_option("--a", a_str, "generators a1,a2,...")->required();
    c_mom->add_option("--alpha", alpha, "moment order");
    c_mom->add_flag("--directed", directed, "directed graph");

    auto* c_sample = app.add_subcommand("sample", "sample (a, n) tuples from the ensemble");
    auto* c_count = app.add_subcommand("count", "exact and asymptotic tuple counts");

    auto* c_frob = app.add_subcommand("frobenius", "Frobenius number of {a1,...,ak, n}");
    c_frob->add_option("--n", n, "last generator n")->required();
    c_frob->add_option("--a", a_str, "generators a1,a2,...")->required();

    double rmin = 0.0, rmax = 5.0, step = 0.01;
    auto* c_dens = app.add_subcommand("densities", "closed-form limit densities on a grid");
    c_dens->add_option("--rmin", rmin, "grid start");
    c_dens->add_option("--rmax", rmax, "grid end");
    c_dens->add_option("--step", step, "grid step");

    std::string law = "tilde_p2";
    bool with_ks = false;
    auto* c_rho = app.add_subcommand("rho-mc", "Haar Monte Carlo of a limit-law statistic");
    c_rho->add_option("--law", law, "p2 | tilde_p2 | p2_scl | tilde_p2_scl");
    c_rho->add_flag("--ks", with_ks, "print the KS distance to the law's CDF");

    std::string stat_diam = "diam_directed_shifted";
    bool histogram = false;
    auto* c_dexp = app.add_subcommand("diam-exp", "scaled-diameter experiment");
    c_dexp->add_option("--statistic", stat_diam,
                       "diam_directed | diam_directed_shifted | diam_undirected | moment");
    c_dexp->add_option("--alpha", alpha, "moment order (statistic = moment)");
    c_dexp->add_flag("--histogram", histogram, "emit a 60-bin histogram instead of raw values");

    std::string stat_scl = "scl_directed";
    auto* c_sexp = app.add_subcommand("scl-exp", "scaled shortest-cycle experiment");
    c_sexp->add_option("--statistic", stat_scl, "scl_directed | scl_undirected");
    c_sexp->add_flag("--histogram", histogram, "emit a 60-bin histogram instead of raw values");

    try {
        app.parse(argc, argv);
        apply_config_defaults(app, g);

        LengthModel lmodel = parse_length_model(g.lengths);
        auto lengths_of = [&](const std::vector<std::int64_t>& a) {
            Tuple t{a, n};
            Lengths l = lengths_for(lmodel, t);
            for (double& v : l.values) v *= l.scale;
            return l.values;
        };

        if (c_diam->parsed()) {
            auto a = parse_int_list(a_str);
            std::printf("%s\n", format_double(diameter(build_circulant(n, a, lengths_of(a), directed))).c_str());
        } else if (c_scl->parsed()) {
            auto a = parse_int_list(a_str);
            if (directed) {
                std::printf("%s\n", format_double(scl_directed(build_circulant(n, a, lengths_of(a), true))).c_str());
            } else {
                build_circulant(n, a, lengths_of(a), false); // validate
                auto lam = kernel_lattice(a, n);
                std::printf("%s\n", format_double(shortest_weighted_l1(lam, lengths_of(a)).second).c_str());
            }
        } else if (c_mom->parsed()) {
            auto a = parse_int_list(a_str);
            auto prof = distance_profile(build_circulant(n, a, lengths_of(a), directed));
            std::printf("%s\n", format_double(moment(prof, alpha)).c_str());
        } else if (c_sample->parsed()) {
            DomainSpec D = domain_by_name(g.domain, g.k, g.cap);
            auto tuples = sample_tuples(D, g.T, g.samples, g.seed);
            std::string csv;
            for (int i = 1; i <= g.k; ++i) csv += "a" + std::to_string(i) + ",";
            csv += "n\n";
            for (auto& t : tuples) {
                for (auto ai : t.a) csv += std::to_string(ai) + ",";
                csv += std::to_string(t.n) + "\n";
            }
            if (g.format == "json") {
                nlohmann::json j;
                j["meta"] = {{"domain", g.domain}, {"T", g.T}, {"seed", g.seed}, {"samples", g.samples}};
                auto& arr = j["tuples"];
                for (auto& t : tuples) {
                    nlohmann::json row = t.a;
                    row.push_back(t.n);
                    arr.push_back(row);
                }
                write_or_print(j.dump(2) + "\n", g.out);
            } else {
                write_or_print(csv, g.out);
            }
        } else if (c_count->parsed()) {
            DomainSpec D = domain_by_name(g.domain, g.k, g.cap);
            std::int64_t exact = count_tuples(D, g.T);
            double asym = asymptotic_count(D, g.T);
            std::printf("count,asymptotic,ratio\n%lld,%s,%s\n", static_cast<long long>(exact),
                        format_double(asym).c_str(),
                        format_double(exact / asym).c_str());
        } else if (c_frob->parsed()) {
            auto a = parse_int_list(a_str);
            std::printf("%lld\n", static_cast<long long>(frobenius(a, n)));
        } else if (c_dens->parsed()) {
            if (!(step > 0) || !(rmax >= rmin)) throw std::invalid_argument("densities: bad grid");
            std::string csv = "R,p2,tilde_p2,p2_scl,tilde_p2_scl\n";
            for (double r = rmin; r <= rmax + 1e-12; r += step) {
                csv += format_double(r) + "," + format_double(p2(r)) + "," + format_double(tilde_p2(r)) +
                       "," + format_double(p2_scl(r)) + "," + format_double(tilde_p2_scl(r)) + "\n";
            }
            write_or_print(csv, g.out);
        } else if (c_rho->parsed()) {
            EmpiricalDistribution emp = mc_limit_estimate(law, g.samples, g.seed);
            if (with_ks) {
                LimitLaw L = limit_law(law);
                double ks = ks_statistic_given(L.cdf_sorted(emp.values), emp.values.size());
                emp.meta["ks"] = format_double(ks);
                std::fprintf(stderr, "ks = %s\n", format_double(ks).c_str());
            }
            emit_empirical(emp, g);
        } else if (c_dexp->parsed() || c_sexp->parsed()) {
            ExperimentConfig cfg;
            cfg.k = g.k;
            cfg.domain = g.domain;
            cfg.cap = g.cap;
            cfg.T = g.T;
            cfg.samples = g.samples;
            cfg.seed = g.seed;
            cfg.statistic = parse_statistic(c_dexp->parsed() ? stat_diam : stat_scl);
            cfg.moment_alpha = alpha;
            cfg.length_model = lmodel;
            cfg.threads = g.threads;
            if (statistic_undirected(cfg.statistic) && g.domain == "fplus" && app.count("--domain") == 0)
                cfg.domain = "f"; // natural default for undirected statistics
            EmpiricalDistribution emp = run_experiment(cfg);
            if (histogram) {
                double lo = 0.0;
                if (cfg.statistic == Statistic::diam_directed_shifted) lo = std::sqrt(3.0);
                if (cfg.statistic == Statistic::diam_undirected) lo = 1.0 / std::sqrt(2.0);
                Histogram h = make_histogram(emp, lo);
                if (g.format == "json") {
                    write_or_print(to_json(h).dump(2) + "\n", g.out);
                } else {
                    write_or_print(to_csv(h), g.out);
                }
            } else {
                emit_empirical(emp, g);
            }
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ringlat::budget_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
