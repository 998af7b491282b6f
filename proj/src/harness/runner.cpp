#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>

#include "hdvol/error.hpp"
#include "hdvol/harness.hpp"
#include "hdvol/linalg.hpp"
#include "hdvol/specfun.hpp"
#include "hdvol/stats.hpp"
#include "parallel.hpp"

namespace hdvol::harness {
namespace {

using geometry::StandardizationModel;
using geometry::StatisticKind;
using linalg::Matrix;

StandardizationModel model_for(const ExperimentConfig& cfg, std::size_t n) {
    StandardizationModel model;
    model.centering = cfg.centering;
    switch (cfg.experiment) {
        case ExperimentKind::DetClt:
            model.kind = StatisticKind::GeneralBody;
            model.body = geometry::BodyModel::cube();
            break;
        case ExperimentKind::PinnedSimplex:
            model.kind = StatisticKind::GeneralBody;
            model.body = geometry::BodyModel::standard_simplex();
            break;
        case ExperimentKind::Body:
            model.kind = StatisticKind::GeneralBody;
            model.body = cfg.body;
            break;
        case ExperimentKind::FullSimplex:
            model.kind = StatisticKind::FullSimplex;
            break;
        case ExperimentKind::LpBody:
            model.kind = StatisticKind::LpBody;
            model.body = cfg.body;
            model.lp = {n, cfg.lp_p, cfg.lp_m};
            break;
        default:
            break;
    }
    return model;
}

void mark_excluded(TrialRecord& rec, const char* reason) {
    rec.excluded = true;
    rec.reason = reason;
    rec.raw = 0.0;
    rec.standardized = 0.0;
}

// ±1 entries: a nonsingular n×n determinant is a multiple of 2^(n-1), and the
// lifted full-simplex determinant a multiple of 2^n. Anything below half that
// is a rounded zero.
bool lattice_singular(const sampling::EntryDistribution& dist, double log_abs_det, std::size_t lattice_exp) {
    if (dist.kind != sampling::EntryKind::Rademacher) {
        return false;
    }
    return log_abs_det < (static_cast<double>(lattice_exp) - 1.0) * std::numbers::ln2;
}

TrialRecord run_trial(const ExperimentConfig& cfg, const StandardizationModel& model, std::size_t n,
                      std::size_t trial) {
    TrialRecord rec;
    rec.n = n;
    rec.trial = trial;
    RngStream rng = trial_stream(cfg.master_seed, n, trial);

    switch (cfg.experiment) {
        case ExperimentKind::DetClt:
        case ExperimentKind::PinnedSimplex:
        case ExperimentKind::Body: {
            Matrix points(n, n);
            sampling::fill_entries(cfg.dist, rng, points.data());
            const double log_vol = geometry::log_volume_random_body(model.body, points);
            if (std::isinf(log_vol) || lattice_singular(cfg.dist, log_vol - model.body.log_vol(n), n - 1)) {
                mark_excluded(rec, "singular");
                break;
            }
            rec.raw = log_vol;
            rec.standardized = geometry::standardize(log_vol, n, model);
            break;
        }
        case ExperimentKind::FullSimplex: {
            Matrix points(n, n + 1);
            sampling::fill_entries(cfg.dist, rng, points.data());
            const double log_vol = geometry::log_volume_full_simplex(points);
            if (std::isinf(log_vol) ||
                lattice_singular(cfg.dist, log_vol + specfun::ln_factorial(static_cast<double>(n)), n)) {
                mark_excluded(rec, "singular");
                break;
            }
            rec.raw = log_vol;
            rec.standardized = geometry::standardize(log_vol, n, model);
            break;
        }
        case ExperimentKind::LpBody: {
            Matrix points(n, n);
            for (std::size_t c = 0; c < n; ++c) {
                sampling::sample_lp_point_into(model.lp, rng, points.column(c));
            }
            const double log_vol = geometry::log_volume_random_body(model.body, points);
            if (std::isinf(log_vol)) {
                mark_excluded(rec, "singular");
                break;
            }
            rec.raw = log_vol;
            rec.standardized = geometry::standardize(log_vol, n, model);
            break;
        }
        case ExperimentKind::NormalVector: {
            Matrix span(n + 1, n);
            sampling::fill_entries(cfg.dist, rng, span.data());
            try {
                const auto normal = linalg::oriented_unit_normal(span);
                double sup = 0.0;
                for (double v : normal) {
                    sup = std::max(sup, std::fabs(v));
                }
                // √(n+1)⟨V, N⟩ with V the normalized all-ones vector
                rec.raw = sup;
                rec.standardized = std::accumulate(normal.begin(), normal.end(), 0.0);
            } catch (const DegenerateSubspaceError&) {
                mark_excluded(rec, "degenerate-subspace");
            }
            break;
        }
        case ExperimentKind::HyperplaneDistance: {
            Matrix span(n + 1, n);
            sampling::fill_entries(cfg.dist, rng, span.data());
            std::vector<double> probe(n + 1);
            sampling::fill_entries(cfg.dist, rng, probe);
            try {
                const auto normal = linalg::unit_normal(span);
                const double d = linalg::dist_to_subspace(probe, normal);
                rec.raw = d;
                rec.standardized = d;
            } catch (const DegenerateSubspaceError&) {
                mark_excluded(rec, "degenerate-subspace");
            }
            break;
        }
        case ExperimentKind::Selftest:
            throw ConfigError("selftest is not a trial-based experiment");
    }
    return rec;
}

}  // namespace

RngStream trial_stream(std::uint64_t master_seed, std::size_t n, std::size_t trial) {
    return RngStream(master_seed, (static_cast<std::uint64_t>(n) << 32) | static_cast<std::uint64_t>(trial));
}

ExperimentRun run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    if (cfg.experiment == ExperimentKind::Selftest) {
        throw ConfigError("use run_selftest for the selftest experiment");
    }
    const unsigned threads = detail::resolve_threads(cfg.threads);

    ExperimentRun run;
    run.report.config = cfg;
    run.report.threads_used = threads;
    run.trials.reserve(cfg.n_list.size() * cfg.trials);

    for (std::size_t n : cfg.n_list) {
        const auto start = std::chrono::steady_clock::now();
        const StandardizationModel model = model_for(cfg, n);
        std::vector<TrialRecord> slots(cfg.trials);
        detail::parallel_for(cfg.trials, threads, [&](unsigned, std::size_t t) {
            slots[t] = run_trial(cfg, model, n, t);
        });

        DimensionRecord rec;
        rec.n = n;
        rec.trials_requested = cfg.trials;
        rec.reference = cfg.experiment == ExperimentKind::HyperplaneDistance ? "half-normal" : "normal";
        std::vector<double> standardized;
        std::vector<double> raw;
        for (const auto& s : slots) {
            if (s.excluded) {
                ++rec.trials_excluded;
            } else {
                standardized.push_back(s.standardized);
                raw.push_back(s.raw);
            }
        }
        if (!standardized.empty()) {
            const stats::Sample sample(std::move(standardized), rec.trials_excluded);
            rec.ks = rec.reference == "half-normal" ? stats::ks_distance_to_half_normal(sample)
                                                    : stats::ks_distance_to_std_normal(sample);
            const auto summary = stats::summarize(sample);
            rec.sample_mean = summary.mean;
            rec.sample_variance = summary.variance;
            rec.raw_median = stats::quantile(stats::Sample(std::move(raw)), 0.5);
        }
        rec.wall_time_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        run.report.records.push_back(std::move(rec));
        std::move(slots.begin(), slots.end(), std::back_inserter(run.trials));
    }

    if (cfg.out_csv) {
        emit_csv(run.report, run.trials, *cfg.out_csv);
    }
    if (cfg.out_summary) {
        write_summary(run.report, *cfg.out_summary, cfg.include_timing);
    }
    return run;
}

Table1Result run_table1(std::size_t n, std::size_t trials, std::uint64_t seed,
                        const sampling::EntryDistribution& dist, geometry::CenteringMode centering,
                        unsigned threads) {
    if (n < 2) {
        throw ConfigError("table1 needs n >= 2");
    }
    if (trials == 0) {
        throw ConfigError("table1 needs at least one trial");
    }
    using geometry::BodyKind;
    const std::vector<std::pair<BodyKind, std::string>> bodies = {
        {BodyKind::StandardSimplex, "T^n"},
        {BodyKind::Cube, "C^n"},
        {BodyKind::SymmetricCube, "B_inf^n"},
        {BodyKind::CrossPolytope, "B_1^n"},
    };

    struct Slot {
        bool singular = false;
        std::vector<double> standardized;
        std::vector<double> stirling;
    };
    std::vector<Slot> slots(trials);
    detail::parallel_for(trials, detail::resolve_threads(threads), [&](unsigned, std::size_t t) {
        RngStream rng = trial_stream(seed, n, t);
        Matrix points(n, n);
        sampling::fill_entries(dist, rng, points.data());
        Slot& slot = slots[t];
        const auto det = linalg::log_abs_det(points);
        if (det.singular() || lattice_singular(dist, det.log_abs, n - 1)) {
            slot.singular = true;
            return;
        }
        for (const auto& [kind, label] : bodies) {
            StandardizationModel model;
            model.kind = StatisticKind::GeneralBody;
            model.body = geometry::BodyModel{kind, {}};
            model.centering = centering;
            const double log_vol = det.log_abs + model.body.log_vol(n);
            slot.standardized.push_back(geometry::standardize(log_vol, n, model));
            slot.stirling.push_back(geometry::table1_stirling_statistic(kind, log_vol, n));
        }
    });

    Table1Result result;
    result.n = n;
    result.trials_requested = trials;
    std::vector<std::vector<double>> per_row_std(bodies.size());
    std::vector<std::vector<double>> per_row_stirling(bodies.size());
    for (const auto& slot : slots) {
        if (slot.singular) {
            ++result.trials_excluded;
            continue;
        }
        const auto [lo, hi] = std::minmax_element(slot.standardized.begin(), slot.standardized.end());
        result.max_pairwise_difference = std::max(result.max_pairwise_difference, *hi - *lo);
        for (std::size_t b = 0; b < bodies.size(); ++b) {
            per_row_std[b].push_back(slot.standardized[b]);
            per_row_stirling[b].push_back(slot.stirling[b]);
        }
    }
    for (std::size_t b = 0; b < bodies.size(); ++b) {
        Table1Row row;
        row.body = bodies[b].first;
        row.label = bodies[b].second;
        if (!per_row_std[b].empty()) {
            row.ks_standardized = stats::ks_distance_to_std_normal(stats::Sample(per_row_std[b]));
            row.ks_stirling = stats::ks_distance_to_std_normal(stats::Sample(per_row_stirling[b]));
        }
        result.rows.push_back(std::move(row));
    }
    return result;
}

}  // namespace hdvol::harness
