#pragma once

// Experiment runner behind the hdvol CLI.
//
// Each experiment draws `trials` independent samples of a statistic for every
// dimension in n_list. Trial t at dimension n always consumes
// RngStream(master_seed, (n << 32) | t), and results land in pre-indexed
// slots, so reports do not depend on the number of worker threads.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hdvol/geometry.hpp"
#include "hdvol/rng.hpp"
#include "hdvol/sampling.hpp"

#include <json.hpp>

namespace hdvol::harness {

inline constexpr std::string_view kVersion = "0.1.0";

enum class ExperimentKind {
    DetClt,
    PinnedSimplex,
    FullSimplex,
    Body,
    LpBody,
    NormalVector,
    HyperplaneDistance,
    Selftest,
};

ExperimentKind parse_experiment(std::string_view name);
std::string_view experiment_name(ExperimentKind kind);

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::DetClt;
    std::vector<std::size_t> n_list{50, 100, 200};
    std::size_t trials = 1000;
    sampling::EntryDistribution dist = sampling::EntryDistribution::gaussian();
    double lp_p = 2.0;
    double lp_m = 0.0;
    geometry::BodyModel body = geometry::BodyModel::standard_simplex();
    geometry::CenteringMode centering = geometry::CenteringMode::ExactFactorial;
    std::uint64_t master_seed = 42;
    unsigned threads = 0;  // 0 = hardware concurrency
    std::optional<std::string> out_csv;
    std::optional<std::string> out_summary;
    bool include_timing = true;

    /// Throws ConfigError describing the first violated constraint.
    void validate() const;
};

/// Overlays the keys present in `doc` onto `cfg`. Unknown keys are rejected.
void apply_config_json(ExperimentConfig& cfg, const nlohmann::json& doc);

/// Reads a flat JSON config file. Throws IoError / ConfigError.
ExperimentConfig load_config_file(const std::string& path);

/// Flat JSON echo of the configuration. Thread count and output paths are
/// left out so that the echo is identical across execution settings.
nlohmann::json config_to_json(const ExperimentConfig& cfg);

/// RNG stream for trial t at dimension n.
RngStream trial_stream(std::uint64_t master_seed, std::size_t n, std::size_t trial);

struct TrialRecord {
    std::size_t n = 0;
    std::size_t trial = 0;
    double raw = 0.0;           // log-volume, ln|det|, ‖N‖_∞ or distance
    double standardized = 0.0;  // the statistic compared with N(0,1) or |N(0,1)|
    bool excluded = false;
    std::string reason;         // "singular" or "degenerate-subspace" when excluded
};

struct DimensionRecord {
    std::size_t n = 0;
    std::size_t trials_requested = 0;
    std::size_t trials_excluded = 0;
    std::string reference;  // "normal" or "half-normal"
    std::optional<double> ks;
    std::optional<double> sample_mean;
    std::optional<double> sample_variance;
    std::optional<double> raw_median;
    double wall_time_seconds = 0.0;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<DimensionRecord> records;
    unsigned threads_used = 1;
};

struct ExperimentRun {
    ExperimentReport report;
    std::vector<TrialRecord> trials;  // ordered by (n position, trial)
};

/// Runs every dimension of the configured experiment and, if configured,
/// writes the CSV and summary files. Selftest configs are rejected here; use
/// run_selftest.
ExperimentRun run_experiment(const ExperimentConfig& cfg);

/// Summary document. Timing (wall times, threads) is included only when
/// `include_timing` is set; without it the document is a pure function of
/// the configuration.
nlohmann::json report_to_json(const ExperimentReport& report, bool include_timing);

/// CSV: header `n,trial,raw_statistic,standardized`, one row per retained
/// trial with 17 significant digits, then `# excluded,n,trial,reason` and
/// one `# excluded,...` line per excluded trial.
void write_csv(std::ostream& out, const std::vector<TrialRecord>& trials);
void emit_csv(const ExperimentReport& report, const std::vector<TrialRecord>& trials,
              const std::string& path);

/// Parses a CSV produced by write_csv (retained and excluded rows).
std::vector<TrialRecord> read_csv(std::istream& in);

void write_summary(const ExperimentReport& report, const std::string& path, bool include_timing);

struct Table1Row {
    geometry::BodyKind body;
    std::string label;
    double ks_standardized = 0.0;  // exact body volume, configured centering
    double ks_stirling = 0.0;       // the row's Stirling-form constants
};

struct Table1Result {
    std::size_t n = 0;
    std::size_t trials_requested = 0;
    std::size_t trials_excluded = 0;
    std::vector<Table1Row> rows;
    /// max over trials of the spread of the four standardized values
    double max_pairwise_difference = 0.0;
};

Table1Result run_table1(std::size_t n, std::size_t trials, std::uint64_t seed,
                        const sampling::EntryDistribution& dist = sampling::EntryDistribution::gaussian(),
                        geometry::CenteringMode centering = geometry::CenteringMode::ExactFactorial,
                        unsigned threads = 0);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelftestOptions {
    std::uint64_t seed = 20240601;
    /// Used only to predict the log-gamma mean E ln(‖G‖_p^p + Q) = ψ(m + n/p) + ln a(p);
    /// replaceable for mutation testing.
    std::function<double(double)> const_a = sampling::const_a;
};

std::vector<CheckResult> run_selftest(const SelftestOptions& options = {});

}  // namespace hdvol::harness
