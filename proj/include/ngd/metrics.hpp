#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ngd/pulses.hpp"

namespace ngd {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s, exact

struct MetricsReport {
    double advancement = 0.0; // s; positive = output peak precedes input peak
    double r = 0.0;           // advancement / T_w (0 when T_w not supplied)
    double eta = 0.0;         // excess power gain
    double distortion = 0.0;  // normalized shift-and-rescale RMS
    double peak_in = 0.0;     // input peak time, s
    double peak_out = 0.0;    // output peak time, s
    double gain_dc = 0.0;     // ratio of signal areas
};

enum class VelocityClass { Subluminal, Superluminal, Negative };

struct VelocityReport {
    double L = 0.0;       // m
    double t_total = 0.0; // s
    double v_g = 0.0;     // m/s, may be negative
    VelocityClass classification = VelocityClass::Subluminal;
};

/// Time of the unique global maximum, refined by a quadratic fit through the
/// three samples around the discrete argmax. Errors on edge peaks and on
/// plateaus wider than 3 samples.
double peak_time(const Signal& sig);

/// Time at which the rising edge first crosses half of the peak value
/// (linear interpolation between samples).
double half_max_rise_time(const Signal& sig);

/// peak_time(input) - peak_time(output); positive = output earlier.
double advancement(const Signal& input, const Signal& output);

/// Same sign convention, measured at the half-maximum rising edge.
double advancement_half_max(const Signal& input, const Signal& output);

/// Output/input energy ratio minus one; energies are sum(v^2) * dt.
double excess_power_gain(const Signal& input, const Signal& output);

/// Pointwise residual between the output (shifted by the measured
/// advancement, rescaled to unit peak) and the unit-peak input, on the
/// input grid. Used by distortion() and by breakdown diagnostics.
Signal aligned_residual(const Signal& input, const Signal& output);

/// RMS of aligned_residual divided by the RMS of the unit-peak input.
/// Invariant under common rescaling and common time shift.
double distortion(const Signal& input, const Signal& output);

/// Group velocity of a free path of length L terminated by a lumped delay
/// t_d: 1/v_g = 1/c + t_d/L.
VelocityReport composite_velocity(double L, double t_d);

/// log10 of the n-stage out-of-band gain bound (1 + 1/(a+b))^n.
double max_gain_budget(double a, double b, int n);

/// Convenience: all pulse metrics for one input/output pair.
MetricsReport measure(const Signal& input, const Signal& output,
                      std::optional<double> T_w = std::nullopt);

std::string summary(const MetricsReport& report);
void write_csv(const MetricsReport& report, std::ostream& os);
const char* to_string(VelocityClass c);

} // namespace ngd
