#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "hdvol/harness.hpp"
#include "hdvol/linalg.hpp"
#include "hdvol/specfun.hpp"
#include "hdvol/stats.hpp"

namespace hdvol::harness {
namespace {

using linalg::Matrix;

std::string describe(double got, double bound) {
    std::ostringstream os;
    os.precision(6);
    os << "value " << got << ", bound " << bound;
    return os.str();
}

CheckResult within(std::string name, double got, double bound) {
    return {std::move(name), got <= bound, describe(got, bound)};
}

double log_uniform(RngStream& rng, double lo, double hi) {
    return std::exp(std::log(lo) + rng.uniform() * (std::log(hi) - std::log(lo)));
}

// Laplace expansion along the first row; only for tiny matrices.
double cofactor_det(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) {
        return m(0, 0);
    }
    double det = 0.0;
    for (std::size_t c = 0; c < n; ++c) {
        Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t cc = 0, k = 0; cc < n; ++cc) {
                if (cc != c) {
                    minor(r - 1, k++) = m(r, cc);
                }
            }
        }
        det += ((c % 2 == 0) ? 1.0 : -1.0) * m(0, c) * cofactor_det(minor);
    }
    return det;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, const sampling::EntryDistribution& dist, RngStream& rng) {
    Matrix m(rows, cols);
    sampling::fill_entries(dist, rng, m.data());
    return m;
}

void specfun_checks(std::vector<CheckResult>& out, std::uint64_t seed) {
    RngStream rng(seed, 1);
    double psi = 0.0, psi1 = 0.0, lg = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x = log_uniform(rng, 0.01, 1e6);
        psi = std::max(psi, std::fabs(specfun::digamma(x + 1) - specfun::digamma(x) - 1.0 / x));
        psi1 = std::max(psi1, std::fabs(specfun::trigamma(x + 1) - specfun::trigamma(x) + 1.0 / (x * x)));
        const double lhs = specfun::ln_gamma(x + 1);
        lg = std::max(lg, std::fabs(lhs - specfun::ln_gamma(x) - std::log(x)) / std::max(1.0, std::fabs(lhs)));
    }
    out.push_back(within("specfun.digamma_recurrence", psi, 1e-10));
    out.push_back(within("specfun.trigamma_recurrence", psi1, 1e-10));
    out.push_back(within("specfun.ln_gamma_recurrence", lg, 1e-11));

    double fd = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double x = 0.5 + 99.5 * rng.uniform();
        const double h = 1e-5;
        const double diff = (specfun::ln_gamma(x + h) - specfun::ln_gamma(x - h)) / (2 * h);
        fd = std::max(fd, std::fabs(diff - specfun::digamma(x)));
    }
    out.push_back(within("specfun.digamma_finite_difference", fd, 1e-5));

    bool monotone = true;
    double sym = 0.0;
    double prev = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double t = -8.0 + 16.0 * i / 9999.0;
        const double v = specfun::std_normal_cdf(t);
        monotone = monotone && v >= prev;
        prev = v;
        sym = std::max(sym, std::fabs(v + specfun::std_normal_cdf(-t) - 1.0));
    }
    out.push_back({"specfun.normal_cdf_monotone", monotone, monotone ? "nondecreasing" : "decrease found"});
    out.push_back(within("specfun.normal_cdf_symmetry", sym, 1e-14));
}

void sampling_checks(std::vector<CheckResult>& out, const SelftestOptions& opt) {
    using sampling::EntryDistribution;
    const std::size_t draws = 200000;
    const double p = 1.5;
    const double pgauss_m4 =
        std::exp(specfun::ln_gamma(5 / p) + specfun::ln_gamma(1 / p) - 2 * specfun::ln_gamma(3 / p));
    const std::vector<std::pair<EntryDistribution, double>> laws = {
        {EntryDistribution::rademacher(), 1.0},
        {EntryDistribution::uniform_symmetric(), 1.8},
        {EntryDistribution::gaussian(), 3.0},
        {EntryDistribution::laplace(), 6.0},
        {EntryDistribution::p_generalized_gaussian(p), pgauss_m4},
    };
    std::uint64_t stream = 10;
    for (const auto& [dist, m4] : laws) {
        RngStream rng(opt.seed, stream++);
        std::vector<double> v(draws);
        sampling::fill_entries(dist, rng, v);
        const auto s = stats::summarize(stats::Sample(v));
        const double n = static_cast<double>(draws);
        out.push_back(within("sampling." + dist.name() + ".mean", std::fabs(s.mean), 4.0 * std::sqrt(m4 / n)));
        out.push_back(within("sampling." + dist.name() + ".variance", std::fabs(*s.variance - 1.0), 0.02));
    }

    {
        // ‖G‖_2^2 over 50 coordinates is Gamma(25, rate 1/2)
        RngStream rng(opt.seed, 20);
        const std::size_t reps = 20000;
        std::vector<double> norms(reps);
        std::vector<double> g(50);
        for (auto& x : norms) {
            sampling::fill_entries(EntryDistribution::p_generalized_gaussian(2.0), rng, g);
            x = std::inner_product(g.begin(), g.end(), g.begin(), 0.0);
        }
        const auto s = stats::summarize(stats::Sample(norms));
        out.push_back(within("sampling.gamma_norm.mean", std::fabs(s.mean - 50.0), 4.0 * std::sqrt(100.0 / reps)));
        out.push_back(within("sampling.gamma_norm.variance", std::fabs(*s.variance / 100.0 - 1.0), 0.05));
    }

    {
        // E ln(‖G‖_2^2 + Q) = ψ(m + n/p) + ln a for n = 50, p = 2, m = 1
        RngStream rng(opt.seed, 21);
        const std::size_t reps = 20000;
        const double a = sampling::const_a(2.0);
        std::vector<double> logs(reps);
        std::vector<double> g(50);
        for (auto& x : logs) {
            sampling::fill_entries(EntryDistribution::p_generalized_gaussian(2.0), rng, g);
            const double q = sampling::sample_gamma(1.0, 1.0 / a, rng);
            x = std::log(std::inner_product(g.begin(), g.end(), g.begin(), 0.0) + q);
        }
        const auto s = stats::summarize(stats::Sample(logs));
        const double expected = specfun::digamma(26.0) + std::log(opt.const_a(2.0));
        const double se = std::sqrt(specfun::trigamma(26.0) / reps);
        out.push_back(within("sampling.log_gamma_mean", std::fabs(s.mean - expected), 4.0 * se));
        out.push_back(within("sampling.log_gamma_variance",
                             std::fabs(*s.variance / specfun::trigamma(26.0) - 1.0), 0.05));
    }

    {
        double worst = 0.0;
        RngStream rng(opt.seed, 22);
        for (double pp : {1.0, 2.0, 3.0}) {
            const sampling::LpBallModel model{5, pp, 0.0};
            for (int i = 0; i < 1000; ++i) {
                const auto x = sampling::sample_lp_point(model, rng);
                double s = 0.0;
                for (double v : x) {
                    s += std::pow(std::fabs(v), pp);
                }
                worst = std::max(worst, std::fabs(std::pow(s, 1.0 / pp) - 1.0));
            }
        }
        out.push_back(within("sampling.cone_measure_support", worst, 1e-10));
    }

    {
        RngStream a(opt.seed, 99);
        RngStream b(opt.seed, 99);
        bool same = true;
        for (int i = 0; i < 1000; ++i) {
            same = same && sampling::sample_gamma(0.7, 1.3, a) == sampling::sample_gamma(0.7, 1.3, b);
        }
        out.push_back({"sampling.determinism", same, same ? "identical streams" : "streams diverged"});
    }
}

void linalg_checks(std::vector<CheckResult>& out, std::uint64_t seed) {
    using sampling::EntryDistribution;
    RngStream rng(seed, 30);

    double worst = 0.0;
    bool sign_ok = true;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
        const auto dist = i % 2 == 0 ? EntryDistribution::rademacher() : EntryDistribution::gaussian();
        const Matrix m = random_matrix(n, n, dist, rng);
        const double ref = cofactor_det(m);
        const auto got = linalg::log_abs_det(m);
        if (ref == 0.0) {
            sign_ok = sign_ok && got.singular();
            continue;
        }
        sign_ok = sign_ok && got.sign == (ref > 0 ? 1 : -1);
        worst = std::max(worst, std::fabs(got.log_abs - std::log(std::fabs(ref))));
    }
    out.push_back({"linalg.cofactor_sign", sign_ok, sign_ok ? "signs agree" : "sign mismatch"});
    out.push_back(within("linalg.cofactor_log_abs", worst, 1e-10));

    double perm = 0.0, scale_err = 0.0, transpose = 0.0;
    bool parity = true;
    for (int i = 0; i < 50; ++i) {
        const Matrix m = random_matrix(6, 6, EntryDistribution::gaussian(), rng);
        const auto base = linalg::log_abs_det(m);
        std::vector<std::size_t> order(6);
        std::iota(order.begin(), order.end(), 0);
        for (std::size_t k = 5; k > 0; --k) {
            std::swap(order[k], order[rng() % (k + 1)]);
        }
        Matrix permuted(6, 6);
        int inversions = 0;
        for (std::size_t c = 0; c < 6; ++c) {
            std::copy(m.column(order[c]).begin(), m.column(order[c]).end(), permuted.column(c).begin());
            for (std::size_t d = c + 1; d < 6; ++d) {
                inversions += order[c] > order[d] ? 1 : 0;
            }
        }
        const auto p = linalg::log_abs_det(permuted);
        perm = std::max(perm, std::fabs(p.log_abs - base.log_abs));
        parity = parity && p.sign == base.sign * (inversions % 2 == 0 ? 1 : -1);

        Matrix scaled = m;
        const double c = 0.1 + 10.0 * rng.uniform();
        for (double& v : scaled.column(2)) {
            v *= -c;
        }
        const auto s = linalg::log_abs_det(scaled);
        scale_err = std::max(scale_err, std::fabs(s.log_abs - base.log_abs - std::log(c)));
        parity = parity && s.sign == -base.sign;

        transpose = std::max(transpose, std::fabs(linalg::log_abs_det(m.transposed()).log_abs - base.log_abs));
    }
    out.push_back(within("linalg.permutation_invariance", perm, 1e-12));
    out.push_back({"linalg.permutation_parity", parity, parity ? "parity tracked" : "parity error"});
    out.push_back(within("linalg.column_scaling", scale_err, 6e-12));
    out.push_back(within("linalg.transpose", transpose, 1e-12));

    // |det(Y|v)| / |det(Y|w)| = dist(v, L) / dist(w, L)
    double ratio = 0.0;
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 10;
        const Matrix y = random_matrix(n + 1, n, EntryDistribution::gaussian(), rng);
        std::vector<double> v(n + 1), w(n + 1);
        sampling::fill_entries(EntryDistribution::gaussian(), rng, v);
        sampling::fill_entries(EntryDistribution::gaussian(), rng, w);
        const auto normal = linalg::unit_normal(y);
        auto det_with = [&](const std::vector<double>& last) {
            Matrix full(n + 1, n + 1);
            std::copy(y.data().begin(), y.data().end(), full.data().begin());
            std::copy(last.begin(), last.end(), full.column(n).begin());
            return linalg::log_abs_det(std::move(full)).log_abs;
        };
        const double lhs = det_with(v) - det_with(w);
        const double rhs = std::log(linalg::dist_to_subspace(v, normal)) - std::log(linalg::dist_to_subspace(w, normal));
        ratio = std::max(ratio, std::fabs(std::expm1(lhs - rhs)));
    }
    out.push_back(within("linalg.hyperplane_decomposition", ratio, 1e-8));
}

void geometry_checks(std::vector<CheckResult>& out, std::uint64_t seed) {
    using geometry::BodyModel;
    using geometry::StandardizationModel;
    using geometry::StatisticKind;
    RngStream rng(seed, 40);

    double spread = 0.0;
    for (std::size_t n : {5, 20, 100}) {
        for (int i = 0; i < 20; ++i) {
            const Matrix x = random_matrix(n, n, sampling::EntryDistribution::gaussian(), rng);
            std::vector<double> values;
            for (const auto& body : {BodyModel::standard_simplex(), BodyModel::cube(), BodyModel::symmetric_cube(),
                                     BodyModel::cross_polytope()}) {
                StandardizationModel model;
                model.kind = StatisticKind::GeneralBody;
                model.body = body;
                values.push_back(geometry::standardize(geometry::log_volume_random_body(body, x), n, model));
            }
            const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
            spread = std::max(spread, *hi - *lo);
        }
    }
    out.push_back(within("geometry.table1_coherence", spread, 1e-10));

    double pinned = 0.0;
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 8;
        Matrix with_origin(n, n + 1);
        sampling::fill_entries(sampling::EntryDistribution::gaussian(), rng, with_origin.data().subspan(n));
        Matrix points(n, n);
        std::copy(with_origin.data().begin() + n, with_origin.data().end(), points.data().begin());
        pinned = std::max(pinned, std::fabs(geometry::log_volume_full_simplex(with_origin) -
                                            geometry::log_volume_random_body(BodyModel::standard_simplex(), points)));
    }
    out.push_back(within("geometry.pinned_full_consistency", pinned, 1e-10));

    double gap = 0.0;
    for (std::size_t n = 3; n <= 2000; n += 37) {
        StandardizationModel exact, paper;
        paper.centering = geometry::CenteringMode::StirlingForm;
        const double d = std::fabs(geometry::standardize(1.0, n, exact) - geometry::standardize(1.0, n, paper));
        gap = std::max(gap, d * geometry::scaling(n));
    }
    // ½ (ln n! - Stirling polynomial) <= ½ (½ ln 2π + 1/36)
    out.push_back(within("geometry.centering_mode_gap", gap, 0.5 * (0.5 * std::log(2 * std::numbers::pi) + 1.0 / 36.0)));
}

void stats_checks(std::vector<CheckResult>& out, std::uint64_t seed) {
    RngStream rng(seed, 50);
    std::vector<double> v(2000);
    sampling::fill_entries(sampling::EntryDistribution::laplace(), rng, v);
    std::vector<double> mirrored(v.size());
    std::transform(v.begin(), v.end(), mirrored.begin(), [](double x) { return -x; });
    const double sym = std::fabs(stats::ks_distance_to_std_normal(stats::Sample(v)) -
                                 stats::ks_distance_to_std_normal(stats::Sample(mirrored)));
    out.push_back(within("stats.ks_mirror_symmetry", sym, 1e-12));

    int exceed = 0;
    const double threshold = 1.36 / std::sqrt(1e4) * 1.5;
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<double> g(10000);
        sampling::fill_entries(sampling::EntryDistribution::gaussian(), rng, g);
        exceed += stats::ks_distance_to_std_normal(stats::Sample(std::move(g))) > threshold ? 1 : 0;
    }
    out.push_back(within("stats.dkw_selftest_exceedances", exceed, 1));
}

void harness_checks(std::vector<CheckResult>& out, std::uint64_t seed) {
    ExperimentConfig cfg;
    cfg.experiment = ExperimentKind::DetClt;
    cfg.n_list = {10, 20};
    cfg.trials = 200;
    cfg.dist = sampling::EntryDistribution::rademacher();
    cfg.master_seed = seed;
    std::string reference;
    bool same = true;
    for (unsigned threads : {1u, 2u}) {
        cfg.threads = threads;
        const auto run = run_experiment(cfg);
        std::ostringstream os;
        os << report_to_json(run.report, false).dump();
        write_csv(os, run.trials);
        if (reference.empty()) {
            reference = os.str();
        } else {
            same = same && reference == os.str();
        }
    }
    out.push_back({"harness.thread_determinism", same, same ? "identical reports" : "reports differ"});
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& options) {
    std::vector<CheckResult> out;
    specfun_checks(out, options.seed);
    sampling_checks(out, options);
    linalg_checks(out, options.seed);
    geometry_checks(out, options.seed);
    stats_checks(out, options.seed);
    harness_checks(out, options.seed);
    return out;
}

}  // namespace hdvol::harness
