#include "bubblegram/bayes.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bubblegram/errors.hpp"

namespace bubblegram {

namespace detail {

ProjectionSums accumulate_sums(std::span<const double> y, std::span<const double> d,
                               std::span<const double> e) {
    ProjectionSums s;
    s.n = y.size();
    for (std::size_t i = 0; i < y.size(); ++i) {
        s.ysq += y[i] * y[i];
        s.yd += y[i] * d[i];
        s.ye += y[i] * e[i];
        s.dd += d[i] * d[i];
        s.ee += e[i] * e[i];
        s.de += d[i] * e[i];
    }
    return s;
}

namespace {

void check_sums(const ProjectionSums& s) {
    if (s.n < 4)
        throw std::invalid_argument("marginal_log_posterior: window must contain >= 4 samples (got " +
                                    std::to_string(s.n) + ")");
    if (!(s.dd > 0.0) || !(s.ee > 0.0))
        throw HypothesisUnsupported("basis identically zero on the window (t0 at or beyond window end, "
                                    "or envelope underflow)");
}

} // namespace

LogPosteriorValue posterior_from_sums(const ProjectionSums& s, bool exact,
                                      double residual_exact_override) {
    check_sums(s);
    LogPosteriorValue out;
    out.norm_d = std::sqrt(s.dd);
    out.norm_e = std::sqrt(s.ee);

    double norm_log_term;
    if (exact) {
        const double det = s.dd * s.ee - s.de * s.de;
        const double trace = s.dd + s.ee;
        const double disc = std::sqrt((s.dd - s.ee) * (s.dd - s.ee) + 4.0 * s.de * s.de);
        const double lo = 0.5 * (trace - disc);
        const double hi = 0.5 * (trace + disc);
        if (!(lo > 0.0) || hi / lo >= kGramConditionLimit)
            throw DegenerateBasis("basis Gram matrix singular or ill-conditioned (condition number >= 1e12)");
        out.residual = residual_exact_override;
        norm_log_term = -0.5 * std::log(det);
    } else {
        out.residual = s.ysq - (s.yd * s.yd) / s.dd - (s.ye * s.ye) / s.ee;
        norm_log_term = -0.5 * std::log(s.dd) - 0.5 * std::log(s.ee);
    }

    const double exponent = 0.5 * (2.0 - static_cast<double>(s.n));
    double bracket;
    if (s.ysq > 0.0) {
        const double clamped = std::max(out.residual, kResidualClampRel * s.ysq);
        bracket = clamped / s.ysq;
    } else {
        // Zero-norm window: the data carry no evidence; the bracket degenerates to 1.
        bracket = 1.0;
        out.degenerate = true;
    }
    out.value = norm_log_term + exponent * std::log(bracket);
    return out;
}

AmplitudeEstimate solve_normal_equations(const ProjectionSums& s) {
    check_sums(s);
    const double det = s.dd * s.ee - s.de * s.de;
    const double trace = s.dd + s.ee;
    const double disc = std::sqrt((s.dd - s.ee) * (s.dd - s.ee) + 4.0 * s.de * s.de);
    const double lo = 0.5 * (trace - disc);
    const double hi = 0.5 * (trace + disc);
    if (!(lo > 0.0) || hi / lo >= kGramConditionLimit)
        throw DegenerateBasis("basis Gram matrix singular or ill-conditioned (condition number >= 1e12)");
    AmplitudeEstimate est;
    est.amp_cos = (s.ee * s.yd - s.de * s.ye) / det;
    est.amp_sin = (s.dd * s.ye - s.de * s.yd) / det;
    return est;
}

// d,e evaluated at window-relative offsets (dt <= 0 excluded by the strict indicator).
// Working in offsets rather than absolute times keeps the grid engine's
// precomputed columns bit-identical to direct per-window calls.
void basis_at_offsets(double r0, const PhysicalConstants& consts, std::span<const double> dts,
                      std::vector<double>& d, std::vector<double>& e) {
    const double w0 = angular_frequency_of_radius(r0, consts);
    const double lambda = lambda_of_radius(r0, consts);
    const double amp = (w0 * r0) * (w0 * r0);
    const double decay = w0 * lambda;
    d.assign(dts.size(), 0.0);
    e.assign(dts.size(), 0.0);
    for (std::size_t i = 0; i < dts.size(); ++i) {
        const double dt = dts[i];
        if (dt <= 0.0) continue;
        const double env = amp * std::exp(-decay * dt);
        d[i] = env * std::cos(w0 * dt);
        e[i] = env * std::sin(w0 * dt);
    }
}

std::vector<double> window_offsets(const Signal& window, double t0) {
    if (window.samples.empty())
        throw std::invalid_argument("marginal_log_posterior: empty signal window");
    if (!(window.sample_rate > 0.0))
        throw std::invalid_argument("marginal_log_posterior: sample_rate must be > 0");
    const double off0 = window.start_time - t0;
    std::vector<double> dts(window.samples.size());
    for (std::size_t i = 0; i < dts.size(); ++i)
        dts[i] = off0 + static_cast<double>(i) / window.sample_rate;
    return dts;
}

detail::ProjectionSums window_sums(const Signal& window, double t0, double r0,
                                   const PhysicalConstants& consts,
                                   std::vector<double>& d, std::vector<double>& e) {
    const auto dts = window_offsets(window, t0);
    basis_at_offsets(r0, consts, dts, d, e);
    return detail::accumulate_sums(window.samples, d, e);
}

double explicit_residual(std::span<const double> y, std::span<const double> d,
                         std::span<const double> e, const AmplitudeEstimate& est) {
    double acc = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        const double r = y[i] - est.amp_cos * d[i] - est.amp_sin * e[i];
        acc += r * r;
    }
    return acc;
}

} // namespace

BasisPair make_basis(double t0, double r0, const PhysicalConstants& consts,
                     std::span<const double> times) {
    // Definitional identity with synth_pulse at unit amplitudes, bit for bit.
    PulseParams unit_cos{t0, r0, 1.0, 0.0, 1.0};
    PulseParams unit_sin{t0, r0, 0.0, 1.0, 1.0};
    BasisPair basis;
    basis.d = synth_pulse(unit_cos, consts, times);
    basis.e = synth_pulse(unit_sin, consts, times);
    return basis;
}

LogPosteriorValue marginal_log_posterior(const Signal& window, double t0, double r0,
                                         const PhysicalConstants& consts) {
    std::vector<double> d, e;
    const auto sums = window_sums(window, t0, r0, consts, d, e);
    return detail::posterior_from_sums(sums, /*exact=*/false);
}

LogPosteriorValue marginal_log_posterior_exact(const Signal& window, double t0, double r0,
                                               const PhysicalConstants& consts) {
    std::vector<double> d, e;
    const auto sums = window_sums(window, t0, r0, consts, d, e);
    const auto est = detail::solve_normal_equations(sums);
    const double residual = explicit_residual(window.samples, d, e, est);
    return detail::posterior_from_sums(sums, /*exact=*/true, residual);
}

AmplitudeEstimate recover_amplitudes(const Signal& window, double t0, double r0,
                                     const PhysicalConstants& consts) {
    std::vector<double> d, e;
    const auto sums = window_sums(window, t0, r0, consts, d, e);
    return detail::solve_normal_equations(sums);
}

} // namespace bubblegram
