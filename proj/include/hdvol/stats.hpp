#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace hdvol::stats {

/// Retained values of one experiment cell, sorted on construction, plus the
/// number of trials excluded as singular/degenerate.
class Sample {
public:
    Sample() = default;
    explicit Sample(std::vector<double> values, std::size_t excluded_count = 0);

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }
    std::size_t excluded_count() const { return excluded_; }

private:
    std::vector<double> values_;
    std::size_t excluded_ = 0;
};

/// sup_t |F_N(t) - Φ(t)|, evaluated at the sample's jump points.
double ks_distance_to_std_normal(const Sample& s);

/// sup_t |F_N(t) - (2Φ(t) - 1)| for nonnegative samples (law of |Z|).
double ks_distance_to_half_normal(const Sample& s);

/// Kolmogorov distance to an arbitrary continuous CDF.
double ks_distance(const Sample& s, const std::function<double(double)>& cdf);

struct Summary {
    double mean = 0.0;
    std::optional<double> variance;  // unbiased; empty when N < 2
    std::function<double(double)> quantile;
};

Summary summarize(const Sample& s);

/// Order-statistic quantile with linear interpolation (type 7): position q·(N-1).
double quantile(const Sample& s, double q);

}  // namespace hdvol::stats
