#include "bubblegram/physics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bubblegram {

namespace {

void check_times(std::span<const double> times) {
    if (times.empty()) throw std::invalid_argument("synth_pulse: empty time array");
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (!(times[i] > times[i - 1]))
            throw std::invalid_argument("synth_pulse: sample times must be strictly increasing (violated at index " +
                                        std::to_string(i) + ")");
    }
}

} // namespace

double PhysicalConstants::minnaert_coefficient() const {
    return std::sqrt(3.0 * gamma * effective_pressure() / rho0);
}

void PhysicalConstants::validate() const {
    if (!(gamma > 1.0)) throw std::domain_error("PhysicalConstants: gamma must be > 1");
    if (!(p0 > 0.0)) throw std::domain_error("PhysicalConstants: p0 must be > 0");
    if (!(rho0 > 0.0)) throw std::domain_error("PhysicalConstants: rho0 must be > 0");
    if (depth < 0.0) throw std::domain_error("PhysicalConstants: depth must be >= 0");
    const double m = minnaert_coefficient();
    if (!std::isfinite(m) || !(m > 0.0))
        throw std::domain_error("PhysicalConstants: minnaert coefficient not finite and positive");
}

double omega_of_radius(double r0, const PhysicalConstants& consts) {
    if (!(r0 > 0.0)) throw std::domain_error("omega_of_radius: radius must be > 0 (got " +
                                             std::to_string(r0) + ")");
    return consts.minnaert_coefficient() / (2.0 * std::numbers::pi * r0);
}

double angular_frequency_of_radius(double r0, const PhysicalConstants& consts) {
    return 2.0 * std::numbers::pi * omega_of_radius(r0, consts);
}

double lambda_of_radius(double r0, const PhysicalConstants& consts) {
    const double f = consts.damping_unit == DampingFrequencyUnit::hertz
                         ? omega_of_radius(r0, consts)
                         : angular_frequency_of_radius(r0, consts);
    return 0.014 + 1.1e-5 * f;
}

double decay_time_constant(double r0, const PhysicalConstants& consts) {
    return 1.0 / (angular_frequency_of_radius(r0, consts) * lambda_of_radius(r0, consts));
}

std::vector<double> synth_pulse(const PulseParams& params, const PhysicalConstants& consts,
                                std::span<const double> times) {
    std::vector<double> out(times.size(), 0.0);
    add_pulse(params, consts, times, out);
    return out;
}

void add_pulse(const PulseParams& params, const PhysicalConstants& consts,
               std::span<const double> times, std::span<double> out) {
    check_times(times);
    if (out.size() != times.size())
        throw std::invalid_argument("add_pulse: output size does not match time array");
    const double w0 = angular_frequency_of_radius(params.r0, consts);
    const double lambda = lambda_of_radius(params.r0, consts);
    const double amp = params.scale_c * (w0 * params.r0) * (w0 * params.r0);
    const double decay = w0 * lambda;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double dt = times[i] - params.t0;
        if (dt <= 0.0) continue; // strict indicator: sample at t0 excluded
        out[i] += amp * std::exp(-decay * dt) *
                  (params.amp_cos * std::cos(w0 * dt) + params.amp_sin * std::sin(w0 * dt));
    }
}

} // namespace bubblegram
