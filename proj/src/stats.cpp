#include "hdvol/stats.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "hdvol/error.hpp"
#include "hdvol/specfun.hpp"

namespace hdvol::stats {

Sample::Sample(std::vector<double> values, std::size_t excluded_count)
    : values_(std::move(values)), excluded_(excluded_count) {
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw InputError("Sample: values must be finite");
        }
    }
    std::sort(values_.begin(), values_.end());
}

double ks_distance(const Sample& s, const std::function<double(double)>& cdf) {
    if (s.empty()) {
        throw InputError("ks_distance: empty sample");
    }
    const auto& x = s.values();
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double f = cdf(x[i]);
        const double above = static_cast<double>(i + 1) / n - f;
        const double below = f - static_cast<double>(i) / n;
        d = std::max({d, std::fabs(above), std::fabs(below)});
    }
    return d;
}

double ks_distance_to_std_normal(const Sample& s) {
    return ks_distance(s, specfun::std_normal_cdf);
}

double ks_distance_to_half_normal(const Sample& s) {
    if (!s.empty() && s.values().front() < 0.0) {
        throw InputError("ks_distance_to_half_normal: negative value");
    }
    return ks_distance(s, [](double t) { return 2.0 * specfun::std_normal_cdf(t) - 1.0; });
}

double quantile(const Sample& s, double q) {
    if (s.empty()) {
        throw InputError("quantile: empty sample");
    }
    if (!(q >= 0.0 && q <= 1.0)) {
        throw DomainError("quantile: probability outside [0, 1]");
    }
    const auto& x = s.values();
    const double pos = q * static_cast<double>(x.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, x.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return x[lo] + frac * (x[hi] - x[lo]);
}

Summary summarize(const Sample& s) {
    if (s.empty()) {
        throw InputError("summarize: empty sample");
    }
    const auto& x = s.values();
    double sum = 0.0;
    for (double v : x) {
        sum += v;
    }
    Summary out;
    out.mean = sum / static_cast<double>(x.size());
    if (x.size() >= 2) {
        double ss = 0.0;
        for (double v : x) {
            ss += (v - out.mean) * (v - out.mean);
        }
        out.variance = ss / static_cast<double>(x.size() - 1);
    }
    auto shared = std::make_shared<const Sample>(s);
    out.quantile = [shared](double q) { return quantile(*shared, q); };
    return out;
}

}  // namespace hdvol::stats
