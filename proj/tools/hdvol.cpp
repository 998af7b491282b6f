// hdvol: Monte Carlo checks of log-volume central limit theorems for random
// simplices, parallelotopes, zonotopes, cross-polytopes and ℓ_p-ball models.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hdvol/error.hpp"
#include "hdvol/harness.hpp"
#include "hdvol/kernels.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitSelftest = 3;

using namespace hdvol;

std::vector<std::size_t> parse_n_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(item, &used);
        } catch (const std::exception&) {
            throw ConfigError("bad dimension in --n: '" + item + "'");
        }
        if (used != item.size()) {
            throw ConfigError("bad dimension in --n: '" + item + "'");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

unsigned parse_threads(const std::string& text) {
    if (text == "auto") {
        return 0;
    }
    try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(text, &used);
        if (used == text.size() && v > 0) {
            return static_cast<unsigned>(v);
        }
    } catch (const std::exception&) {
    }
    throw ConfigError("--threads expects a positive integer or 'auto'");
}

std::string fmt(const std::optional<double>& v) {
    if (!v) {
        return "n/a";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", *v);
    return buf;
}

int print_selftest(const std::vector<harness::CheckResult>& results) {
    int failures = 0;
    for (const auto& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << "  (" << r.detail << ")\n";
        failures += r.passed ? 0 : 1;
    }
    std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << ": " << results.size() - failures
              << "/" << results.size() << " checks\n";
    return failures == 0 ? kExitOk : kExitSelftest;
}

void print_report(const harness::ExperimentReport& report) {
    std::cout << "experiment " << harness::experiment_name(report.config.experiment) << ", dist "
              << report.config.dist.name() << ", seed " << report.config.master_seed << ", threads "
              << report.threads_used << ", kernels " << kernels::isa_name(kernels::active().isa) << "\n";
    std::cout << "     n  trials  excluded        KS        mean    variance   time[s]\n";
    for (const auto& r : report.records) {
        char line[160];
        std::snprintf(line, sizeof line, "%6zu %7zu %9zu %9s %11s %11s %9.3f\n", r.n, r.trials_requested,
                      r.trials_excluded, fmt(r.ks).c_str(), fmt(r.sample_mean).c_str(),
                      fmt(r.sample_variance).c_str(), r.wall_time_seconds);
        std::cout << line;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hdvol: log-volume CLT experiments for random convex bodies"};
    app.require_subcommand(1);

    auto* run = app.add_subcommand("run", "run an experiment");
    std::string config_path, experiment, n_text, dist, body, centering, threads, out_csv, out_summary;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    double p = 0.0, m = 0.0;
    bool no_timing = false;
    auto* o_config = run->add_option("--config", config_path, "flat JSON config file");
    auto* o_exp = run->add_option("--experiment", experiment,
                                  "det-clt|pinned-simplex|full-simplex|body|lp-body|normal-vector|"
                                  "hyperplane-distance|selftest");
    auto* o_n = run->add_option("--n", n_text, "comma-separated dimensions, e.g. 50,100,200");
    auto* o_trials = run->add_option("--trials", trials, "trials per dimension");
    auto* o_dist = run->add_option("--dist", dist, "rademacher|uniform|gaussian|laplace|pgauss:<p>");
    auto* o_body = run->add_option("--body", body, "simplex|cube|symcube|crosspolytope");
    auto* o_p = run->add_option("--p", p, "l_p exponent (lp-body)");
    auto* o_m = run->add_option("--m", m, "gamma shape m (lp-body)");
    auto* o_center = run->add_option("--centering", centering, "exact|paper");
    auto* o_seed = run->add_option("--seed", seed, "master seed");
    auto* o_threads = run->add_option("--threads", threads, "worker threads or 'auto'");
    auto* o_csv = run->add_option("--out-csv", out_csv, "per-trial CSV output");
    auto* o_summary = run->add_option("--out-summary", out_summary, "JSON summary output");
    run->add_flag("--no-timing", no_timing, "omit wall times and thread count from the summary");

    auto* selftest = app.add_subcommand("selftest", "run the built-in invariant checks");
    std::uint64_t selftest_seed = harness::SelftestOptions{}.seed;
    selftest->add_option("--seed", selftest_seed, "seed for the checks");

    auto* table1 = app.add_subcommand("table1", "KS distances of the four special-case statistics");
    std::size_t t1_n = 100, t1_trials = 1000;
    std::uint64_t t1_seed = 42;
    std::string t1_dist = "gaussian", t1_centering = "exact", t1_threads = "auto";
    table1->add_option("--n", t1_n, "dimension")->capture_default_str();
    table1->add_option("--trials", t1_trials, "number of shared point sets")->capture_default_str();
    table1->add_option("--seed", t1_seed, "master seed")->capture_default_str();
    table1->add_option("--dist", t1_dist, "entry distribution")->capture_default_str();
    table1->add_option("--centering", t1_centering, "exact|paper")->capture_default_str();
    table1->add_option("--threads", t1_threads, "worker threads or 'auto'")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (*selftest) {
            harness::SelftestOptions options;
            options.seed = selftest_seed;
            return print_selftest(harness::run_selftest(options));
        }
        if (*table1) {
            const auto result = harness::run_table1(t1_n, t1_trials, t1_seed,
                                                    sampling::EntryDistribution::parse(t1_dist),
                                                    geometry::parse_centering(t1_centering), parse_threads(t1_threads));
            std::cout << "n " << result.n << ", trials " << result.trials_requested << ", excluded "
                      << result.trials_excluded << ", max spread of standardized values "
                      << result.max_pairwise_difference << "\n";
            std::cout << "row        KS(standardized)  KS(Stirling row)\n";
            for (const auto& row : result.rows) {
                char line[128];
                std::snprintf(line, sizeof line, "%-9s %17.6f %16.6f\n", row.label.c_str(), row.ks_standardized,
                              row.ks_stirling);
                std::cout << line;
            }
            return kExitOk;
        }

        harness::ExperimentConfig cfg;
        if (o_config->count() > 0) {
            cfg = harness::load_config_file(config_path);
        }
        if (o_exp->count() > 0) cfg.experiment = harness::parse_experiment(experiment);
        if (o_n->count() > 0) cfg.n_list = parse_n_list(n_text);
        if (o_trials->count() > 0) cfg.trials = trials;
        if (o_dist->count() > 0) cfg.dist = sampling::EntryDistribution::parse(dist);
        if (o_body->count() > 0) cfg.body = geometry::BodyModel::parse(body);
        if (o_p->count() > 0) cfg.lp_p = p;
        if (o_m->count() > 0) cfg.lp_m = m;
        if (o_center->count() > 0) cfg.centering = geometry::parse_centering(centering);
        if (o_seed->count() > 0) cfg.master_seed = seed;
        if (o_threads->count() > 0) cfg.threads = parse_threads(threads);
        if (o_csv->count() > 0) cfg.out_csv = out_csv;
        if (o_summary->count() > 0) cfg.out_summary = out_summary;
        if (no_timing) cfg.include_timing = false;

        if (cfg.experiment == harness::ExperimentKind::Selftest) {
            harness::SelftestOptions options;
            options.seed = cfg.master_seed;
            return print_selftest(harness::run_selftest(options));
        }
        const auto result = harness::run_experiment(cfg);
        print_report(result.report);
        return kExitOk;
    } catch (const ConfigError& e) {
        std::cerr << "hdvol: invalid configuration: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InputError& e) {
        std::cerr << "hdvol: invalid input: " << e.what() << "\n";
        return kExitValidation;
    } catch (const DomainError& e) {
        std::cerr << "hdvol: invalid parameter: " << e.what() << "\n";
        return kExitValidation;
    } catch (const IoError& e) {
        std::cerr << "hdvol: I/O error: " << e.what() << "\n";
        return kExitRuntime;
    } catch (const std::exception& e) {
        std::cerr << "hdvol: error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
