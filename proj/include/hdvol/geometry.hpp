#pragma once

// Random convex bodies K[X_1, ..., X_n] = { Σ y_i X_i : y ∈ K }, their exact
// log-volumes, and the standardized log-volume statistics whose limit law
// is N(0, 1).

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "hdvol/linalg.hpp"
#include "hdvol/sampling.hpp"

namespace hdvol::geometry {

enum class BodyKind { StandardSimplex, Cube, SymmetricCube, CrossPolytope, Custom };

/// Template body K_n, known only through its log-volume as a function of n.
struct BodyModel {
    BodyKind kind = BodyKind::Cube;
    std::function<double(std::size_t)> custom_log_vol;  // Custom only

    static BodyModel standard_simplex() { return {BodyKind::StandardSimplex, {}}; }
    static BodyModel cube() { return {BodyKind::Cube, {}}; }
    static BodyModel symmetric_cube() { return {BodyKind::SymmetricCube, {}}; }
    static BodyModel cross_polytope() { return {BodyKind::CrossPolytope, {}}; }
    static BodyModel custom(std::function<double(std::size_t)> log_vol) {
        return {BodyKind::Custom, std::move(log_vol)};
    }

    /// Parses the CLI names simplex | cube | symcube | crosspolytope.
    static BodyModel parse(std::string_view name);
    std::string name() const;

    /// ln vol_n(K_n): -ln n!, 0, n ln 2, n ln 2 - ln n! respectively.
    double log_vol(std::size_t n) const;
};

enum class CenteringMode {
    ExactFactorial,     // ½ ln (n-1)! through ln_gamma
    StirlingForm,  // (n/2) ln n - n/2 ± c ln n polynomials
};

CenteringMode parse_centering(std::string_view name);  // "exact" | "paper"
std::string_view centering_name(CenteringMode mode);

enum class StatisticKind {
    FullSimplex,  // conv{X_0, ..., X_n}, i.i.d. coordinates
    GeneralBody,  // K[X_1, ..., X_n], i.i.d. coordinates
    LpBody,       // K[X_1, ..., X_n], X_i ~ ν_n(m, p)
};

struct StandardizationModel {
    StatisticKind kind = StatisticKind::GeneralBody;
    BodyModel body = BodyModel::cube();
    sampling::LpBallModel lp{};  // p and m used by LpBody
    CenteringMode centering = CenteringMode::ExactFactorial;
};

/// ln vol(K[X_1..X_n]) = ln|det(X_1|...|X_n)| + ln vol(K). Returns -infinity
/// for singular point sets. Throws InputError unless `points` is n x n.
double log_volume_random_body(const BodyModel& body, const linalg::Matrix& points);

/// ln vol(conv{X_0..X_n}) for n+1 points in n-space (an n x (n+1) matrix),
/// via the lift X -> (X, 1): ln|det(X_0'|...|X_n')| - ln n!.
double log_volume_full_simplex(const linalg::Matrix& points);

/// (n/p) ln(a(p) (m + n/p)).
double lp_centering(std::size_t n, const sampling::LpBallModel& lp);

/// The deterministic centering μ(n) subtracted from the log-volume.
double centering(std::size_t n, const StandardizationModel& model);

/// √(½ ln n).
double scaling(std::size_t n);

/// (log_vol - μ(n)) / √(½ ln n). Throws DomainError for n < 2 and
/// InputError for non-finite log_vol.
double standardize(double log_vol, std::size_t n, const StandardizationModel& model);

/// One row of the special-case table for K ∈ {T^n, C^n, B_∞^n, B_1^n}, with
/// the row's Stirling-form centering polynomial (no exact factorials).
double table1_stirling_statistic(BodyKind body, double log_vol, std::size_t n);

}  // namespace hdvol::geometry
