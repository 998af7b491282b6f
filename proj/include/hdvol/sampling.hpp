#pragma once

// Random scalar and vector generation: the symmetric unit-variance entry
// laws, a gamma sampler, and the radially symmetric measures ν_n(m, p) on
// the ℓ_p-ball.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hdvol/rng.hpp"

namespace hdvol::sampling {

enum class EntryKind { Rademacher, UniformSymmetric, Gaussian, Laplace, PGeneralizedGaussian };

/// A symmetric, mean-zero, variance-one scalar law.
///
/// `alpha` is the subexponential tail exponent, carried as metadata only
/// (it enters the ‖N‖_∞ trend bound of the normal-vector experiment).
struct EntryDistribution {
    EntryKind kind = EntryKind::Gaussian;
    double p = 2.0;  // PGeneralizedGaussian only
    double alpha = 0.5;

    static EntryDistribution rademacher();
    static EntryDistribution uniform_symmetric();
    static EntryDistribution gaussian();
    static EntryDistribution laplace();
    static EntryDistribution p_generalized_gaussian(double p);

    /// Parses "rademacher", "uniform", "gaussian", "laplace" or "pgauss:<p>".
    static EntryDistribution parse(std::string_view spec);

    /// Inverse of parse().
    std::string name() const;
};

/// Parameters of ν_n(m, p): dimension, exponent, shape of the radial gamma part.
struct LpBallModel {
    std::size_t n = 1;
    double p = 2.0;
    double m = 0.0;

    void validate() const;
};

/// a(p) = (Γ(1/p)/Γ(3/p))^{p/2}, the scale making e^{-|t|^p/a} a unit-variance density.
double const_a(double p);

double sample_entry(const EntryDistribution& dist, RngStream& rng);

/// Fills `out` with i.i.d. draws. Gaussian draws are produced in Box–Muller
/// pairs, so the sequence differs from repeated sample_entry() calls.
void fill_entries(const EntryDistribution& dist, RngStream& rng, std::span<double> out);

double sample_standard_normal(RngStream& rng);

/// Gamma(shape, rate) draw, density ∝ t^{shape-1} e^{-rate·t}.
double sample_gamma(double shape, double rate, RngStream& rng);

/// X = G / (‖G‖_p^p + Q)^{1/p} with G i.i.d. p-generalized Gaussian and
/// Q ~ Gamma(m, 1/a(p)) (Q = 0 when m = 0).
std::vector<double> sample_lp_point(const LpBallModel& model, RngStream& rng);

/// As sample_lp_point, writing into `out` (size model.n).
void sample_lp_point_into(const LpBallModel& model, RngStream& rng, std::span<double> out);

}  // namespace hdvol::sampling
