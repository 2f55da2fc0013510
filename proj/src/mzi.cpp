#include "ngd/mzi.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ngd {

namespace {

// 8-tap windowed-sinc interpolation of sig at fractional index x.
// The kernel is normalized to unit sum so a constant input stays constant.
double interp_sinc8(const std::vector<double>& v, double x) {
    const long base = static_cast<long>(std::floor(x));
    double acc = 0.0, wsum = 0.0;
    for (long q = base - 3; q <= base + 4; ++q) {
        const double u = x - static_cast<double>(q); // in (-4, 4]
        double w;
        if (std::abs(u) < 1e-12) {
            w = 1.0;
        } else {
            const double su = std::numbers::pi * u;
            w = std::sin(su) / su * 0.5 * (1.0 + std::cos(std::numbers::pi * u / 4.0));
        }
        acc += w * v[static_cast<std::size_t>(q)];
        wsum += w;
    }
    return acc / wsum;
}

} // namespace

Signal dark_port(const Signal& env, const MziConfig& cfg) {
    if (env.samples.empty() || !(env.dt > 0.0))
        throw std::invalid_argument("dark_port: invalid envelope");
    if (!(cfg.epsilon >= 0.0) || !(cfg.epsilon < 0.5))
        throw std::invalid_argument("dark_port: epsilon must lie in [0, 1/2)");
    if (!(cfg.tau >= env.dt))
        throw std::invalid_argument("dark_port: tau must be at least one sample interval");
    if (cfg.tau > env.duration())
        throw std::invalid_argument("dark_port: tau exceeds the signal duration");
    for (double v : env.samples)
        if (!std::isfinite(v)) throw std::invalid_argument("dark_port: non-finite sample");

    const double R = cfg.reflectivity();
    const std::size_t n = env.samples.size();
    const double delay = cfg.tau / env.dt; // in samples
    const double frac = delay - std::floor(delay);
    const bool integer_shift = frac < 1e-9 || frac > 1.0 - 1e-9;

    std::size_t i_start, i_end;
    if (integer_shift) {
        const std::size_t s = static_cast<std::size_t>(std::llround(delay));
        i_start = s;
        i_end = n - 1;
    } else {
        i_start = static_cast<std::size_t>(std::ceil(delay)) + 3;
        i_end = n - 5 + static_cast<std::size_t>(std::floor(delay));
    }
    if (i_start >= i_end)
        throw std::invalid_argument("dark_port: signal too short after trimming");

    Signal out;
    out.dt = env.dt;
    out.t0 = env.t0 + static_cast<double>(i_start) * env.dt;
    out.samples.resize(i_end - i_start + 1);
    for (std::size_t i = i_start; i <= i_end; ++i) {
        double delayed;
        if (integer_shift)
            delayed = env.samples[i - static_cast<std::size_t>(std::llround(delay))];
        else
            delayed = interp_sinc8(env.samples, static_cast<double>(i) - delay);
        out.samples[i - i_start] = (1.0 - R) * env.samples[i] - R * delayed;
    }
    return out;
}

double first_order_advancement(const MziConfig& cfg) {
    if (!(cfg.epsilon > 0.0))
        throw std::invalid_argument("first_order_advancement: requires epsilon > 0");
    return cfg.tau / (4.0 * cfg.epsilon);
}

std::complex<double> two_path_response(const MziConfig& cfg, double omega) {
    const double R = cfg.reflectivity();
    return (1.0 - R) - R * std::complex<double>(std::cos(omega * cfg.tau),
                                                -std::sin(omega * cfg.tau));
}

} // namespace ngd
