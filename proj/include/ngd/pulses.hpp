#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "ngd/errors.hpp"

namespace ngd {

/// Uniformly sampled real time series.
struct Signal {
    std::vector<double> samples;
    double dt = 0.0; // sample interval, s
    double t0 = 0.0; // time of the first sample, s

    std::size_t size() const { return samples.size(); }
    double time_at(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
    double duration() const { return (samples.empty() ? 0.0 : (samples.size() - 1) * dt); }
};

enum class PulseKind { Rectangular, Gaussian, TruncatedGaussian };

/// Test pulse description.
///   Rectangular:        amplitude on [t_start, t_start + width), 0 elsewhere.
///   Gaussian:           amplitude * exp(-(t - t_start)^2 / (2 width^2)).
///   TruncatedGaussian:  u(t) * gaussian centered at t_start; u is a sharp
///                       unit step (1 at t >= 0) or, when ramp > 0, a
///                       raised-cosine ramp over [0, ramp].
struct PulseSpec {
    PulseKind kind = PulseKind::Gaussian;
    double width = 1.0;     // T_w, s
    double t_start = 0.0;   // rectangular rising edge, or gaussian center t0
    double amplitude = 1.0;
    double ramp = 0.0;      // truncation smoothing window, s (0 = sharp step)
};

/// Complex frequency-domain samples on a symmetric grid centered at 0;
/// index size()/2 is omega = 0.
struct Spectrum {
    std::vector<std::complex<double>> values;
    double domega = 0.0; // rad/s

    std::size_t size() const { return values.size(); }
    double omega_at(std::size_t i) const {
        return (static_cast<double>(i) - static_cast<double>(values.size() / 2)) * domega;
    }
};

/// Evaluate the pulse pointwise on [t_begin, t_end] with step dt.
Signal sample(const PulseSpec& spec, double dt, double t_begin, double t_end);

/// Continuous-transform approximation of the signal under the e^{-i omega t}
/// kernel: DFT of the zero-padded samples scaled by dt (including the t0
/// phase). The padded length is the next power of two >= size * pad_factor.
Spectrum spectrum(const Signal& sig, int pad_factor = 4);

/// CSV serialization: header "t,v", 12 significant digits, LF endings.
void write_csv(const Signal& sig, std::ostream& os);

} // namespace ngd
