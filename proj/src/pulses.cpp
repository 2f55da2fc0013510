#include "ngd/pulses.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "ngd/csv.hpp"
#include "ngd/fft.hpp"

namespace ngd {

namespace csv {

std::string number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

} // namespace csv

namespace {

double step_value(double t, double ramp) {
    if (t < 0.0) return 0.0;
    if (ramp <= 0.0 || t >= ramp) return 1.0;
    return 0.5 * (1.0 - std::cos(std::numbers::pi * t / ramp));
}

double pulse_value(const PulseSpec& spec, double t) {
    switch (spec.kind) {
    case PulseKind::Rectangular:
        // left-closed: the sample exactly at the rising edge is high
        return (t >= spec.t_start && t < spec.t_start + spec.width) ? spec.amplitude : 0.0;
    case PulseKind::Gaussian: {
        const double u = (t - spec.t_start) / spec.width;
        return spec.amplitude * std::exp(-0.5 * u * u);
    }
    case PulseKind::TruncatedGaussian: {
        const double u = (t - spec.t_start) / spec.width;
        return step_value(t, spec.ramp) * spec.amplitude * std::exp(-0.5 * u * u);
    }
    }
    throw std::invalid_argument("sample: unknown pulse kind");
}

} // namespace

Signal sample(const PulseSpec& spec, double dt, double t_begin, double t_end) {
    if (!(spec.width > 0.0) || !std::isfinite(spec.width))
        throw std::invalid_argument("sample: pulse width must be positive");
    if (!std::isfinite(spec.amplitude) || !std::isfinite(spec.t_start))
        throw std::invalid_argument("sample: non-finite pulse parameters");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::invalid_argument("sample: dt must be positive");
    if (!std::isfinite(t_begin) || !std::isfinite(t_end) || !(t_begin < t_end))
        throw std::invalid_argument("sample: requires finite t_begin < t_end");
    const double count = std::floor((t_end - t_begin) / dt) + 1.0;
    if (count > 1e7)
        throw std::invalid_argument("sample: more than 1e7 samples requested");

    Signal sig;
    sig.dt = dt;
    sig.t0 = t_begin;
    sig.samples.resize(static_cast<std::size_t>(count));
    for (std::size_t i = 0; i < sig.samples.size(); ++i)
        sig.samples[i] = pulse_value(spec, sig.time_at(i));
    return sig;
}

Spectrum spectrum(const Signal& sig, int pad_factor) {
    if (sig.samples.empty() || !(sig.dt > 0.0))
        throw std::invalid_argument("spectrum: invalid signal");
    if (pad_factor < 1 || pad_factor > 64)
        throw std::invalid_argument("spectrum: pad_factor must be in [1, 64]");
    const std::size_t n = sig.samples.size();
    const std::size_t npad = fft::next_pow2(n * static_cast<std::size_t>(pad_factor));
    if (npad > (std::size_t{1} << 30))
        throw std::invalid_argument("spectrum: padded length overflow");

    std::vector<std::complex<double>> buf(npad, {0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) buf[i] = sig.samples[i];
    fft::transform(buf, /*inverse=*/false);

    Spectrum spec;
    spec.domega = 2.0 * std::numbers::pi / (static_cast<double>(npad) * sig.dt);
    spec.values.resize(npad);
    const std::size_t half = npad / 2;
    for (std::size_t i = 0; i < npad; ++i) {
        // shift so index `half` is omega = 0; fold the t0 phase into the scale
        const std::size_t k = (i + half) % npad;
        const double omega = spec.omega_at(i);
        const std::complex<double> phase(std::cos(omega * sig.t0), -std::sin(omega * sig.t0));
        spec.values[i] = buf[k] * sig.dt * phase;
    }
    return spec;
}

void write_csv(const Signal& sig, std::ostream& os) {
    os << "t,v\n";
    for (std::size_t i = 0; i < sig.samples.size(); ++i)
        os << csv::number(sig.time_at(i)) << ',' << csv::number(sig.samples[i]) << '\n';
}

} // namespace ngd
