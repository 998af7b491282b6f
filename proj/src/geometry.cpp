#include "hdvol/geometry.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "hdvol/error.hpp"
#include "hdvol/specfun.hpp"

namespace hdvol::geometry {

BodyModel BodyModel::parse(std::string_view name) {
    if (name == "simplex") return standard_simplex();
    if (name == "cube") return cube();
    if (name == "symcube") return symmetric_cube();
    if (name == "crosspolytope") return cross_polytope();
    throw InputError("unknown body: " + std::string(name));
}

std::string BodyModel::name() const {
    switch (kind) {
        case BodyKind::StandardSimplex: return "simplex";
        case BodyKind::Cube: return "cube";
        case BodyKind::SymmetricCube: return "symcube";
        case BodyKind::CrossPolytope: return "crosspolytope";
        case BodyKind::Custom: return "custom";
    }
    return "unknown";
}

double BodyModel::log_vol(std::size_t n) const {
    const double dn = static_cast<double>(n);
    switch (kind) {
        case BodyKind::StandardSimplex: return -specfun::ln_factorial(dn);
        case BodyKind::Cube: return 0.0;
        case BodyKind::SymmetricCube: return dn * std::numbers::ln2;
        case BodyKind::CrossPolytope: return dn * std::numbers::ln2 - specfun::ln_factorial(dn);
        case BodyKind::Custom:
            if (!custom_log_vol) {
                throw InputError("custom body without a log-volume function");
            }
            return custom_log_vol(n);
    }
    return 0.0;
}

CenteringMode parse_centering(std::string_view name) {
    if (name == "exact") return CenteringMode::ExactFactorial;
    if (name == "paper") return CenteringMode::StirlingForm;
    throw InputError("unknown centering mode: " + std::string(name));
}

std::string_view centering_name(CenteringMode mode) {
    return mode == CenteringMode::ExactFactorial ? "exact" : "paper";
}

double log_volume_random_body(const BodyModel& body, const linalg::Matrix& points) {
    if (!points.square() || points.rows() == 0) {
        throw InputError("log_volume_random_body: expected n points in n-space");
    }
    const auto det = linalg::log_abs_det(points);
    if (det.singular()) {
        return -std::numeric_limits<double>::infinity();
    }
    return det.log_abs + body.log_vol(points.rows());
}

double log_volume_full_simplex(const linalg::Matrix& points) {
    const std::size_t n = points.rows();
    if (n == 0 || points.cols() != n + 1) {
        throw InputError("log_volume_full_simplex: expected n+1 points in n-space");
    }
    linalg::Matrix lifted(n + 1, n + 1);
    for (std::size_t c = 0; c <= n; ++c) {
        const auto src = points.column(c);
        auto dst = lifted.column(c);
        std::copy(src.begin(), src.end(), dst.begin());
        dst[n] = 1.0;
    }
    const auto det = linalg::log_abs_det(std::move(lifted));
    if (det.singular()) {
        return -std::numeric_limits<double>::infinity();
    }
    return det.log_abs - specfun::ln_factorial(static_cast<double>(n));
}

double lp_centering(std::size_t n, const sampling::LpBallModel& lp) {
    const double shape = lp.m + static_cast<double>(n) / lp.p;
    return static_cast<double>(n) / lp.p * std::log(sampling::const_a(lp.p) * shape);
}

double scaling(std::size_t n) {
    return std::sqrt(0.5 * std::log(static_cast<double>(n)));
}

double centering(std::size_t n, const StandardizationModel& model) {
    const double dn = static_cast<double>(n);
    const double ln_n = std::log(dn);
    const bool exact = model.centering == CenteringMode::ExactFactorial;
    // ½ ln (n-1)! and its Stirling polynomial
    const double half_ln_fact_nm1 = exact ? 0.5 * specfun::ln_gamma(dn) : 0.5 * dn * ln_n - 0.5 * dn - 0.25 * ln_n;
    switch (model.kind) {
        case StatisticKind::FullSimplex:
            // ln vol = ln|det_{n+1}| - ln n!, and ln|det_{n+1}| is centred at ½ ln n!
            return exact ? -0.5 * specfun::ln_factorial(dn) : -0.5 * dn * ln_n + 0.5 * dn - 0.25 * ln_n;
        case StatisticKind::GeneralBody:
            return model.body.log_vol(n) + half_ln_fact_nm1;
        case StatisticKind::LpBody:
            return model.body.log_vol(n) + half_ln_fact_nm1 - lp_centering(n, model.lp);
    }
    return 0.0;
}

double standardize(double log_vol, std::size_t n, const StandardizationModel& model) {
    if (n < 2) {
        throw DomainError("standardize: n must be at least 2");
    }
    if (!std::isfinite(log_vol)) {
        throw InputError("standardize: log-volume must be finite");
    }
    return (log_vol - centering(n, model)) / scaling(n);
}

double table1_stirling_statistic(BodyKind body, double log_vol, std::size_t n) {
    if (n < 2) {
        throw DomainError("table1_stirling_statistic: n must be at least 2");
    }
    const double dn = static_cast<double>(n);
    const double ln_n = std::log(dn);
    double shifted = 0.0;
    switch (body) {
        case BodyKind::StandardSimplex:
            shifted = log_vol + 0.5 * dn * ln_n - 0.5 * dn + 0.75 * ln_n;
            break;
        case BodyKind::Cube:
            shifted = log_vol - 0.5 * dn * ln_n + 0.5 * dn + 0.25 * ln_n;
            break;
        case BodyKind::SymmetricCube:
            shifted = log_vol - 0.5 * dn * ln_n - (std::numbers::ln2 - 0.5) * dn + 0.25 * ln_n;
            break;
        case BodyKind::CrossPolytope:
            shifted = log_vol + 0.5 * dn * ln_n - (std::numbers::ln2 + 0.5) * dn + 0.75 * ln_n;
            break;
        case BodyKind::Custom:
            throw InputError("table1_stirling_statistic: no Stirling row for custom bodies");
    }
    return shifted / scaling(n);
}

}  // namespace hdvol::geometry
