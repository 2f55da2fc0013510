#pragma once

#include <complex>

#include "ngd/pulses.hpp"

namespace ngd {

/// Mach-Zehnder dark port with both beam splitters detuned from 50%
/// reflectivity: R = 1/2 - epsilon.
struct MziConfig {
    double tau = 0.0;     // path-difference delay, s
    double epsilon = 0.0; // reflectivity offset, in [0, 1/2)

    double reflectivity() const { return 0.5 - epsilon; }
};

/// Dark-port envelope (1-R) E(t) - R E(t - tau). The delayed term uses
/// 8-tap windowed-sinc interpolation when tau is not a sample multiple;
/// the output window starts where the delayed term is defined.
Signal dark_port(const Signal& envelope, const MziConfig& cfg);

/// Small-tau prediction of the dark-port advancement: tau / (4 epsilon).
double first_order_advancement(const MziConfig& cfg);

/// Analytic frequency response of the two-path operator:
/// (1-R) - R e^{-i omega tau}.
std::complex<double> two_path_response(const MziConfig& cfg, double omega);

} // namespace ngd
