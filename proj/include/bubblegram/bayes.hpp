#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bubblegram/physics.hpp"
#include "bubblegram/signal.hpp"

namespace bubblegram {

/// Radius-parameterized model pair: d = unit-cos pulse, e = unit-sin pulse.
/// Both are zero at sample times <= t0.
struct BasisPair {
    std::vector<double> d;
    std::vector<double> e;
};

/// Marginal log-posterior of one (t0, R0) hypothesis on one window.
///
/// value is a log-density up to an additive constant shared by every
/// hypothesis evaluated on any window of the same length:
///   -1/2 log||d||^2 - 1/2 log||e||^2 + (2-N)/2 * log(residual / ||y||^2).
/// The dimensionless bracket (rather than the raw residual) keeps values
/// comparable across the sliding windows of a bubblegram.
struct LogPosteriorValue {
    double value = 0.0;
    double residual = 0.0; // raw bracket, signal units^2 (unclamped)
    double norm_d = 0.0;   // ||d||
    double norm_e = 0.0;   // ||e||
    bool degenerate = false; // zero-norm window: no evidence either way
};

/// Point estimates of the marginalized linear amplitudes.
struct AmplitudeEstimate {
    double amp_cos = 0.0;
    double amp_sin = 0.0;
};

/// Relative floor applied to the residual before the log (exact fits).
inline constexpr double kResidualClampRel = 1e-12;

/// Gram condition-number limit beyond which the exact projection refuses to invert.
inline constexpr double kGramConditionLimit = 1e12;

/// Basis of Eq.-11 form at hypothesis (t0, r0): identical to synth_pulse with
/// (A=1,B=0) and (A=0,B=1), C=1. Propagates physics domain errors.
BasisPair make_basis(double t0, double r0, const PhysicalConstants& consts,
                     std::span<const double> times);

/// Marginalized log-posterior treating d and e as orthogonal (the paper's
/// printed projection form). Window must have >= 4 samples; throws
/// HypothesisUnsupported when the basis is identically zero on the window.
LogPosteriorValue marginal_log_posterior(const Signal& window, double t0, double r0,
                                         const PhysicalConstants& consts);

/// Exact two-column projection through the 2x2 Gram matrix; throws
/// DegenerateBasis when the Gram matrix is singular (condition number >= 1e12).
LogPosteriorValue marginal_log_posterior_exact(const Signal& window, double t0, double r0,
                                               const PhysicalConstants& consts);

/// Least-squares (A, B) under the exact projection.
AmplitudeEstimate recover_amplitudes(const Signal& window, double t0, double r0,
                                     const PhysicalConstants& consts);

namespace detail {

/// Sufficient statistics of one (window, hypothesis) pair. Accumulation order
/// is plain sequential; the grid engine reproduces it exactly so that engine
/// cells match direct calls bit for bit.
struct ProjectionSums {
    double ysq = 0.0; // <y,y>
    double yd = 0.0;  // <y,d>
    double ye = 0.0;  // <y,e>
    double dd = 0.0;  // <d,d>
    double ee = 0.0;  // <e,e>
    double de = 0.0;  // <d,e>
    std::size_t n = 0;
};

ProjectionSums accumulate_sums(std::span<const double> y, std::span<const double> d,
                               std::span<const double> e);

/// Basis arrays evaluated at window-relative offsets dt = t - t0 (dt <= 0 gives 0).
void basis_at_offsets(double r0, const PhysicalConstants& consts, std::span<const double> dts,
                      std::vector<double>& d, std::vector<double>& e);

/// ||y - A d - B e||^2 accumulated in index order.
double explicit_residual(std::span<const double> y, std::span<const double> d,
                         std::span<const double> e, const AmplitudeEstimate& est);

/// Shared arithmetic behind both posterior flavors. residual_exact_override,
/// when non-negative, replaces the sums-derived residual (used by the exact
/// path, which computes ||y - Ad - Be||^2 explicitly for stability).
LogPosteriorValue posterior_from_sums(const ProjectionSums& s, bool exact,
                                      double residual_exact_override = -1.0);

/// Solves the 2x2 normal equations. Throws DegenerateBasis.
AmplitudeEstimate solve_normal_equations(const ProjectionSums& s);

} // namespace detail

} // namespace bubblegram
