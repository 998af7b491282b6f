#include "hdvol/sampling.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hdvol/error.hpp"
#include "hdvol/specfun.hpp"

namespace hdvol::sampling {
namespace {

constexpr double kSqrt3 = 1.7320508075688772935;

double sample_gamma_unchecked(double shape, double rate, RngStream& rng) {
    if (shape < 1.0) {
        // Gamma(shape) = Gamma(shape + 1) · U^{1/shape}, done in log space
        const double boosted = sample_gamma_unchecked(shape + 1.0, 1.0, rng);
        const double log_u = std::log(rng.uniform_open());
        return std::exp(std::log(boosted) + log_u / shape) / rate;
    }
    // Marsaglia–Tsang squeeze/rejection
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x;
        double v;
        do {
            x = sample_standard_normal(rng);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.uniform_open();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            return d * v / rate;
        }
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            return d * v / rate;
        }
    }
}

double p_generalized(double p, double a, RngStream& rng) {
    // |t|^p ~ Gamma(1/p, rate 1/a), independent uniform sign
    const double g = sample_gamma_unchecked(1.0 / p, 1.0 / a, rng);
    return rng.sign() * std::pow(g, 1.0 / p);
}

}  // namespace

EntryDistribution EntryDistribution::rademacher() {
    return {EntryKind::Rademacher, 2.0, 0.5};
}

EntryDistribution EntryDistribution::uniform_symmetric() {
    return {EntryKind::UniformSymmetric, 2.0, 0.5};
}

EntryDistribution EntryDistribution::gaussian() {
    return {EntryKind::Gaussian, 2.0, 0.5};
}

EntryDistribution EntryDistribution::laplace() {
    return {EntryKind::Laplace, 1.0, 1.0};
}

EntryDistribution EntryDistribution::p_generalized_gaussian(double p) {
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw DomainError("p-generalized Gaussian needs finite p > 0");
    }
    return {EntryKind::PGeneralizedGaussian, p, 1.0 / p};
}

EntryDistribution EntryDistribution::parse(std::string_view spec) {
    if (spec == "rademacher") return rademacher();
    if (spec == "uniform") return uniform_symmetric();
    if (spec == "gaussian") return gaussian();
    if (spec == "laplace") return laplace();
    constexpr std::string_view prefix = "pgauss:";
    if (spec.substr(0, prefix.size()) == prefix) {
        const std::string_view rest = spec.substr(prefix.size());
        double p = 0.0;
        const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
        if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
            throw InputError("bad exponent in distribution spec: " + std::string(spec));
        }
        return p_generalized_gaussian(p);
    }
    throw InputError("unknown distribution: " + std::string(spec));
}

std::string EntryDistribution::name() const {
    switch (kind) {
        case EntryKind::Rademacher: return "rademacher";
        case EntryKind::UniformSymmetric: return "uniform";
        case EntryKind::Gaussian: return "gaussian";
        case EntryKind::Laplace: return "laplace";
        case EntryKind::PGeneralizedGaussian: {
            std::ostringstream os;
            os.precision(17);
            os << "pgauss:" << p;
            return os.str();
        }
    }
    return "unknown";
}

void LpBallModel::validate() const {
    if (n == 0) {
        throw DomainError("LpBallModel: n must be at least 1");
    }
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw DomainError("LpBallModel: p must be finite and positive");
    }
    if (!(m >= 0.0) || !std::isfinite(m)) {
        throw DomainError("LpBallModel: m must be finite and nonnegative");
    }
}

double const_a(double p) {
    if (!(p > 0.0)) {
        throw DomainError("const_a: p must be positive");
    }
    return std::exp(0.5 * p * (specfun::ln_gamma(1.0 / p) - specfun::ln_gamma(3.0 / p)));
}

double sample_standard_normal(RngStream& rng) {
    const double r = std::sqrt(-2.0 * std::log(rng.uniform_open()));
    return r * std::cos(2.0 * std::numbers::pi * rng.uniform());
}

double sample_entry(const EntryDistribution& dist, RngStream& rng) {
    switch (dist.kind) {
        case EntryKind::Rademacher:
            return rng.sign();
        case EntryKind::UniformSymmetric:
            return kSqrt3 * (2.0 * rng.uniform() - 1.0);
        case EntryKind::Gaussian:
            return sample_standard_normal(rng);
        case EntryKind::Laplace:
            return rng.sign() * (-std::log(rng.uniform_open()) / std::numbers::sqrt2);
        case EntryKind::PGeneralizedGaussian:
            return p_generalized(dist.p, const_a(dist.p), rng);
    }
    return 0.0;
}

void fill_entries(const EntryDistribution& dist, RngStream& rng, std::span<double> out) {
    switch (dist.kind) {
        case EntryKind::Gaussian: {
            std::size_t i = 0;
            for (; i + 2 <= out.size(); i += 2) {
                const double r = std::sqrt(-2.0 * std::log(rng.uniform_open()));
                const double theta = 2.0 * std::numbers::pi * rng.uniform();
                out[i] = r * std::cos(theta);
                out[i + 1] = r * std::sin(theta);
            }
            if (i < out.size()) {
                out[i] = sample_standard_normal(rng);
            }
            return;
        }
        case EntryKind::PGeneralizedGaussian: {
            const double a = const_a(dist.p);
            for (double& v : out) {
                v = p_generalized(dist.p, a, rng);
            }
            return;
        }
        default:
            for (double& v : out) {
                v = sample_entry(dist, rng);
            }
    }
}

double sample_gamma(double shape, double rate, RngStream& rng) {
    if (!(shape > 0.0) || !(rate > 0.0) || !std::isfinite(shape) || !std::isfinite(rate)) {
        throw DomainError("sample_gamma: shape and rate must be finite and positive");
    }
    return sample_gamma_unchecked(shape, rate, rng);
}

void sample_lp_point_into(const LpBallModel& model, RngStream& rng, std::span<double> out) {
    model.validate();
    if (out.size() != model.n) {
        throw InputError("sample_lp_point_into: output size does not match model.n");
    }
    const double p = model.p;
    const double a = const_a(p);
    const double inv_p = 1.0 / p;
    // draw |G_j|^p directly; their sum is ‖G‖_p^p without a pow round trip
    double norm_pp = 0.0;
    for (double& v : out) {
        const double g = sample_gamma_unchecked(inv_p, 1.0 / a, rng);
        norm_pp += g;
        v = rng.sign() * g;
    }
    const double q = model.m > 0.0 ? sample_gamma_unchecked(model.m, 1.0 / a, rng) : 0.0;
    const double denom = norm_pp + q;
    for (double& v : out) {
        v = std::copysign(std::pow(std::fabs(v) / denom, inv_p), v);
    }
}

std::vector<double> sample_lp_point(const LpBallModel& model, RngStream& rng) {
    model.validate();
    std::vector<double> out(model.n);
    sample_lp_point_into(model, rng, out);
    return out;
}

}  // namespace hdvol::sampling
