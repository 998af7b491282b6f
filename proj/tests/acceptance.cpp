// Acceptance suite. One PASS/FAIL line per criterion; exit status 1 if any fail.
//
//   hdvol_acceptance                 run all criteria
//   hdvol_acceptance --criterion 7   run one

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hdvol/geometry.hpp"
#include "hdvol/harness.hpp"
#include "hdvol/linalg.hpp"
#include "hdvol/rng.hpp"
#include "hdvol/sampling.hpp"
#include "hdvol/specfun.hpp"
#include "hdvol/stats.hpp"
#include "oracles.hpp"

using namespace hdvol;
using harness::ExperimentConfig;
using harness::ExperimentKind;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what) {
        pass = pass && ok;
        if (!detail.empty()) {
            detail += "; ";
        }
        detail += what + (ok ? "" : " [miss]");
    }
};

std::string fmt(const char* f, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ExperimentConfig experiment(ExperimentKind kind, std::size_t n, std::size_t trials,
                            sampling::EntryDistribution dist = sampling::EntryDistribution::gaussian()) {
    ExperimentConfig cfg;
    cfg.experiment = kind;
    cfg.n_list = {n};
    cfg.trials = trials;
    cfg.dist = dist;
    cfg.master_seed = 42;
    cfg.threads = 0;
    cfg.include_timing = false;
    return cfg;
}

double mean_of(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) {
        s += x;
    }
    return s / v.size();
}

double var_of(const std::vector<double>& v) {
    const double m = mean_of(v);
    double s = 0.0;
    for (double x : v) {
        s += (x - m) * (x - m);
    }
    return s / (v.size() - 1);
}

Outcome log_gamma_moment() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const std::size_t n = 50;
    const std::size_t draws = 100000;
    const double a = sampling::const_a(2.0);
    RngStream rng(42, 1);
    std::vector<double> g(n);
    std::vector<double> v(draws);
    for (auto& x : v) {
        sampling::fill_entries(sampling::EntryDistribution::p_generalized_gaussian(2.0), rng, g);
        double s = 0.0;
        for (double e : g) {
            s += e * e;
        }
        x = std::log(s + sampling::sample_gamma(1.0, 1.0 / a, rng));
    }
    const double mu = specfun::digamma(26.0) + std::log(a);
    const double sigma2 = specfun::trigamma(26.0);
    const double tol = 4.0 * std::sqrt(sigma2 / draws);
    const double m = mean_of(v);
    const double rel = std::fabs(var_of(v) / sigma2 - 1.0);
    const double secs = seconds_since(t0);
    out.require(std::fabs(m - mu) <= tol, fmt("|mean - (psi(26)+ln2)| = %.2e <= %.2e", std::fabs(m - mu), tol));
    out.require(rel <= 0.05, fmt("variance rel. err %.4f <= 0.05", rel));
    out.require(secs < 10.0, fmt("%.2fs < 10s", secs));
    return out;
}

Outcome cone_support() {
    Outcome out;
    RngStream rng(42, 2);
    for (double p : {1.0, 2.0, 3.0}) {
        double worst = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const auto x = sampling::sample_lp_point({5, p, 0.0}, rng);
            double s = 0.0;
            for (double e : x) {
                s += std::pow(std::fabs(e), p);
            }
            worst = std::max(worst, std::fabs(std::pow(s, 1.0 / p) - 1.0));
        }
        out.require(worst <= 1e-10, fmt("p=%g max dev %.1e", p, worst));
    }
    return out;
}

Outcome uniform_ball_moment() {
    Outcome out;
    // rejection-sampling cross-check of n/(n+2) at n = 5
    {
        RngStream rng(42, 30);
        double acc = 0.0;
        int kept = 0;
        while (kept < 100000) {
            double r2 = 0.0;
            for (int i = 0; i < 5; ++i) {
                const double u = 2.0 * rng.uniform() - 1.0;
                r2 += u * u;
            }
            if (r2 <= 1.0) {
                acc += r2;
                ++kept;
            }
        }
        const double se = std::sqrt((5.0 / 7.0) * (2.0 / 7.0) / kept);
        out.require(std::fabs(acc / kept - 5.0 / 7.0) <= 4 * se,
                    fmt("rejection n=5 mean %.5f vs 5/7", acc / kept));
    }
    RngStream rng(42, 3);
    std::vector<double> r2(100000);
    for (auto& v : r2) {
        const auto x = sampling::sample_lp_point({10, 2.0, 1.0}, rng);
        v = 0.0;
        for (double e : x) {
            v += e * e;
        }
    }
    const double m = mean_of(r2);
    const double se = std::sqrt(var_of(r2) / r2.size());
    out.require(std::fabs(m - 10.0 / 12.0) <= 3 * se,
                fmt("mean |X|^2 = %.5f, |diff| %.2e <= 3SE %.2e", m, std::fabs(m - 10.0 / 12.0), 3 * se));
    return out;
}

const std::vector<sampling::EntryDistribution>& det_clt_laws() {
    static const std::vector<sampling::EntryDistribution> laws = {
        sampling::EntryDistribution::gaussian(), sampling::EntryDistribution::rademacher(),
        sampling::EntryDistribution::laplace()};
    return laws;
}

Outcome determinant_clt() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    for (const auto& dist : det_clt_laws()) {
        const auto run = harness::run_experiment(experiment(ExperimentKind::DetClt, 100, 10000, dist));
        const auto& r = run.report.records[0];
        out.require(r.ks && *r.ks <= 0.05,
                    fmt("%s KS %.4f (mean %.3f var %.3f excl %zu)", dist.name().c_str(), r.ks.value_or(1.0),
                        r.sample_mean.value_or(NAN), r.sample_variance.value_or(NAN), r.trials_excluded));
    }
    const double secs = seconds_since(t0);
    out.require(secs <= 120.0, fmt("%.1fs <= 120s", secs));
    return out;
}

Outcome rate_trend() {
    Outcome out;
    int improved = 0;
    for (std::uint64_t seed : {42u, 43u, 44u}) {
        auto cfg = experiment(ExperimentKind::DetClt, 16, 10000);
        cfg.n_list = {16, 64, 256};
        cfg.master_seed = seed;
        const auto run = harness::run_experiment(cfg);
        const double k16 = *run.report.records[0].ks;
        const double k64 = *run.report.records[1].ks;
        const double k256 = *run.report.records[2].ks;
        improved += k256 <= k16 ? 1 : 0;
        out.detail += fmt("%sseed %llu: %.4f/%.4f/%.4f", out.detail.empty() ? "" : "; ",
                          static_cast<unsigned long long>(seed), k16, k64, k256);
    }
    out.require(improved >= 2, fmt("KS(256) <= KS(16) for %d of 3 seeds", improved));
    return out;
}

Outcome table1_coherence() {
    Outcome out;
    const auto r = harness::run_table1(100, 100, 42);
    out.require(r.trials_excluded == 0, fmt("%zu excluded", r.trials_excluded));
    out.require(r.max_pairwise_difference <= 1e-10, fmt("max spread %.2e <= 1e-10", r.max_pairwise_difference));
    return out;
}

Outcome full_simplex_clt() {
    Outcome out;
    const auto run = harness::run_experiment(
        experiment(ExperimentKind::FullSimplex, 100, 10000, sampling::EntryDistribution::rademacher()));
    const auto& r = run.report.records[0];
    out.require(r.ks && *r.ks <= 0.07, fmt("KS %.4f <= 0.07 (excl %zu)", r.ks.value_or(1.0), r.trials_excluded));
    return out;
}

Outcome decomposition() {
    Outcome out;
    const std::size_t n = 10;
    RngStream rng(42, 8);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        linalg::Matrix x(n, n + 1);
        sampling::fill_entries(sampling::EntryDistribution::gaussian(), rng, x.data());
        // Y_i: the i-th coordinate across the n+1 lifted points; U: the row of ones; Y_{n+1}: fresh
        linalg::Matrix y(n + 1, n + 1);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k <= n; ++k) {
                y(k, i) = x(i, k);
            }
        }
        sampling::fill_entries(sampling::EntryDistribution::gaussian(), rng, y.column(n));
        linalg::Matrix span(n + 1, n);
        std::copy(y.data().begin(), y.data().begin() + n * (n + 1), span.data().begin());
        const auto normal = linalg::unit_normal(span);
        const std::vector<double> u(n + 1, 1.0);
        const double rhs = linalg::log_abs_det(y).log_abs -
                           std::log(linalg::dist_to_subspace(y.column(n), normal)) +
                           std::log(linalg::dist_to_subspace(u, normal)) - specfun::ln_factorial(double(n));
        worst = std::max(worst, std::fabs(geometry::log_volume_full_simplex(x) - rhs));
    }
    out.require(worst <= 1e-8, fmt("max residual %.2e <= 1e-8", worst));
    return out;
}

Outcome hyperplane_distance() {
    Outcome out;
    const auto run = harness::run_experiment(
        experiment(ExperimentKind::HyperplaneDistance, 100, 10000, sampling::EntryDistribution::rademacher()));
    const auto& r = run.report.records[0];
    out.require(r.ks && *r.ks <= 0.05,
                fmt("KS to half-normal %.4f <= 0.05 (excl %zu)", r.ks.value_or(1.0), r.trials_excluded));
    return out;
}

Outcome normal_vector() {
    Outcome out;
    const auto run = harness::run_experiment(experiment(ExperimentKind::NormalVector, 100, 10000));
    const auto& r = run.report.records[0];
    out.require(r.ks && *r.ks <= 0.05, fmt("KS %.4f <= 0.05", r.ks.value_or(1.0)));
    return out;
}

Outcome lp_clt() {
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    for (auto [p, m] : {std::pair{1.0, 0.0}, std::pair{2.0, 1.0}}) {
        auto cfg = experiment(ExperimentKind::LpBody, 100, 5000);
        cfg.lp_p = p;
        cfg.lp_m = m;
        cfg.body = geometry::BodyModel::standard_simplex();
        const auto run = harness::run_experiment(cfg);
        const auto& r = run.report.records[0];
        out.require(r.ks && *r.ks <= 0.07, fmt("p=%g m=%g KS %.4f (mean %.3f var %.3f)", p, m, r.ks.value_or(1.0),
                                                r.sample_mean.value_or(NAN), r.sample_variance.value_or(NAN)));
    }
    const double secs = seconds_since(t0);
    out.require(secs <= 180.0, fmt("%.1fs <= 180s", secs));
    return out;
}

Outcome singularity_oracle() {
    Outcome out;
    const double p = oracle::rademacher3_singular_fraction();
    const auto run = harness::run_experiment(
        experiment(ExperimentKind::DetClt, 3, 100000, sampling::EntryDistribution::rademacher()));
    const double freq = run.report.records[0].trials_excluded / 1e5;
    const double se = std::sqrt(p * (1 - p) / 1e5);
    out.require(std::fabs(freq - p) <= 3 * se,
                fmt("excluded %.5f vs exact %.5f (%d/512), 3SE %.5f", freq, p, int(p * 512), 3 * se));
    return out;
}

Outcome brute_force() {
    Outcome out;
    RngStream rng(42, 13);
    double worst = 0.0;
    int sign_mismatch = 0;
    int singular = 0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + t % 4;
        const auto dist = t % 2 == 0 ? sampling::EntryDistribution::rademacher()
                                     : sampling::EntryDistribution::gaussian();
        linalg::Matrix m(n, n);
        sampling::fill_entries(dist, rng, m.data());
        std::vector<std::vector<double>> rows(n, std::vector<double>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                rows[i][j] = m(i, j);
            }
        }
        const double det = oracle::cofactor_det(rows);
        const auto r = linalg::log_abs_det(m);
        const int s = det > 0 ? 1 : det < 0 ? -1 : 0;
        sign_mismatch += r.sign != s ? 1 : 0;
        if (s == 0) {
            ++singular;
        } else {
            worst = std::max(worst, std::fabs(r.log_abs - std::log(std::fabs(det))));
        }
    }
    out.require(sign_mismatch == 0 && worst <= 1e-10,
                fmt("det: %d sign mismatches, max |dlog| %.1e, %d singular", sign_mismatch, worst, singular));
    out.require(singular > 0, "singular cases present");

    double worst_area = 0.0;
    for (int t = 0; t < 100; ++t) {
        linalg::Matrix p(2, 3);
        sampling::fill_entries(sampling::EntryDistribution::gaussian(), rng, p.data());
        const double area = oracle::shoelace({{{p(0, 0), p(1, 0)}, {p(0, 1), p(1, 1)}, {p(0, 2), p(1, 2)}}});
        worst_area = std::max(worst_area, std::fabs(geometry::log_volume_full_simplex(p) - std::log(area)));
    }
    out.require(worst_area <= 1e-10, fmt("shoelace max |dlog| %.1e", worst_area));
    return out;
}

Outcome determinism() {
    Outcome out;
    for (const auto& dist : det_clt_laws()) {
        std::string csv[2];
        std::string json[2];
        int i = 0;
        for (unsigned threads : {1u, 8u}) {
            auto cfg = experiment(ExperimentKind::DetClt, 100, 10000, dist);
            cfg.threads = threads;
            const auto run = harness::run_experiment(cfg);
            std::ostringstream s;
            harness::write_csv(s, run.trials);
            csv[i] = s.str();
            json[i] = harness::report_to_json(run.report, false).dump(2);
            ++i;
        }
        out.require(csv[0] == csv[1] && json[0] == json[1],
                    fmt("%s: csv %zu bytes, summary %zu bytes identical", dist.name().c_str(), csv[0].size(),
                        json[0].size()));
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hdvol acceptance suite"};
    int only = 0;
    app.add_option("--criterion", only, "run a single criterion (1-14)")->check(CLI::Range(1, 14));
    CLI11_PARSE(app, argc, argv);

    const std::map<int, std::pair<const char*, std::function<Outcome()>>> criteria = {
        {1, {"log-gamma moment identity", log_gamma_moment}},
        {2, {"cone-measure support", cone_support}},
        {3, {"uniform-ball moment", uniform_ball_moment}},
        {4, {"determinant CLT", determinant_clt}},
        {5, {"rate trend", rate_trend}},
        {6, {"table 1 coherence", table1_coherence}},
        {7, {"full-simplex CLT", full_simplex_clt}},
        {8, {"decomposition identity", decomposition}},
        {9, {"hyperplane-distance limit", hyperplane_distance}},
        {10, {"normal-vector CLT", normal_vector}},
        {11, {"lp-ball CLT", lp_clt}},
        {12, {"singularity oracle", singularity_oracle}},
        {13, {"brute-force equivalence", brute_force}},
        {14, {"determinism across thread counts", determinism}},
    };

    int failed = 0;
    for (const auto& [id, entry] : criteria) {
        if (only != 0 && id != only) {
            continue;
        }
        const auto& [name, fn] = entry;
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("%s  criterion %2d  %-34s %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
        std::fflush(stdout);
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
