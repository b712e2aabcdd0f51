#pragma once

#include <span>
#include <vector>

namespace bubblegram {

/// Frequency fed into the damping law lambda = 0.014 + 1.1e-5 * f.
/// The hertz reading gives lambda ~ 0.05 for a 1 mm bubble (physically plausible);
/// the rad/s reading gives ~ 0.24 and is kept for sensitivity studies.
enum class DampingFrequencyUnit { hertz, radians_per_second };

inline constexpr double kStandardGravity = 9.80665; // m/s^2

/// Acoustic constants of the liquid/gas system. Defaults are fresh water at
/// 20 degC under 1 atm; override via config for other conditions.
struct PhysicalConstants {
    double gamma = 1.4;    // ratio of specific heats of the gas
    double p0 = 101325.0;  // static pressure, Pa
    double rho0 = 998.0;   // liquid density, kg/m^3
    double depth = 0.0;    // optional sensor depth, m; adds rho0*g*depth to p0
    DampingFrequencyUnit damping_unit = DampingFrequencyUnit::hertz;

    /// p0 plus the hydrostatic head for the configured depth.
    double effective_pressure() const { return p0 + rho0 * kStandardGravity * depth; }

    /// sqrt(3*gamma*P0/rho0), m/s. Equals f0 * 2*pi*R0 for every radius.
    double minnaert_coefficient() const;

    /// Throws std::domain_error when gamma <= 1, p0 <= 0 or rho0 <= 0.
    void validate() const;
};

/// One synthetic bubble pulse: onset, equilibrium radius and linear amplitudes.
struct PulseParams {
    double t0 = 0.0;      // onset, s
    double r0 = 0.0;      // equilibrium radius, m
    double amp_cos = 1.0; // A
    double amp_sin = 0.0; // B
    double scale_c = 1.0; // overall constant C
};

/// Fundamental (cyclic) frequency of a bubble of radius r0, Hz.
/// Strictly decreasing in r0; throws std::domain_error for r0 <= 0.
double omega_of_radius(double r0, const PhysicalConstants& consts);

/// 2*pi * omega_of_radius, rad/s. The oscillator and decay exponent use this.
double angular_frequency_of_radius(double r0, const PhysicalConstants& consts);

/// Dimensionless damping constant 0.014 + 1.1e-5 * f, with f per consts.damping_unit.
double lambda_of_radius(double r0, const PhysicalConstants& consts);

/// e-folding time of the pulse envelope, 1/(angular_frequency * lambda), s.
double decay_time_constant(double r0, const PhysicalConstants& consts);

/// Sampled pulse C*(w0*R0)^2 * exp(-w0*lambda*(t-t0)) * (A*cos(w0*(t-t0)) + B*sin(...))
/// gated by the strict indicator t > t0 (the sample at exactly t0 is zero).
/// times must be non-empty and strictly increasing (not necessarily uniform).
std::vector<double> synth_pulse(const PulseParams& params,
                                const PhysicalConstants& consts,
                                std::span<const double> times);

/// Accumulating variant: out[i] += pulse(times[i]). Same contract as synth_pulse.
void add_pulse(const PulseParams& params, const PhysicalConstants& consts,
               std::span<const double> times, std::span<double> out);

} // namespace bubblegram
