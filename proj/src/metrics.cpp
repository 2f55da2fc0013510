#include "ngd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ngd/csv.hpp"

namespace ngd {

namespace {

std::size_t argmax(const Signal& sig) {
    if (sig.samples.empty()) throw std::invalid_argument("peak_time: empty signal");
    return static_cast<std::size_t>(
        std::max_element(sig.samples.begin(), sig.samples.end()) - sig.samples.begin());
}

// Linear interpolation of sig at time t; zero outside the window.
double value_at(const Signal& sig, double t) {
    const double x = (t - sig.t0) / sig.dt;
    if (x < 0.0 || x > static_cast<double>(sig.samples.size() - 1)) return 0.0;
    const std::size_t i = std::min(static_cast<std::size_t>(x), sig.samples.size() - 2);
    const double f = x - static_cast<double>(i);
    return (1.0 - f) * sig.samples[i] + f * sig.samples[i + 1];
}

double energy(const Signal& sig) {
    double e = 0.0;
    for (double v : sig.samples) e += v * v;
    return e * sig.dt;
}

} // namespace

double peak_time(const Signal& sig) {
    const std::size_t i = argmax(sig);
    const double peak = sig.samples[i];
    if (i == 0 || i + 1 == sig.samples.size())
        throw std::invalid_argument("peak_time: maximum sits at the window edge");

    // plateau / multiple-maximum guard
    const double tol = 1e-12 * std::max(1.0, std::abs(peak));
    std::size_t flat = 0;
    for (double v : sig.samples)
        if (peak - v <= tol) ++flat;
    if (flat > 3)
        throw std::invalid_argument("peak_time: ambiguous peak (plateau wider than 3 samples)");

    const double ym = sig.samples[i - 1], y0 = sig.samples[i], yp = sig.samples[i + 1];
    const double denom = ym - 2.0 * y0 + yp;
    double shift = 0.0;
    if (denom != 0.0) shift = 0.5 * (ym - yp) / denom;
    shift = std::clamp(shift, -0.5, 0.5);
    return sig.time_at(i) + shift * sig.dt;
}

double half_max_rise_time(const Signal& sig) {
    const std::size_t i = argmax(sig);
    const double half = 0.5 * sig.samples[i];
    for (std::size_t k = 1; k <= i; ++k) {
        if (sig.samples[k] >= half && sig.samples[k - 1] < half) {
            const double f = (half - sig.samples[k - 1]) / (sig.samples[k] - sig.samples[k - 1]);
            return sig.time_at(k - 1) + f * sig.dt;
        }
    }
    throw std::invalid_argument("half_max_rise_time: no rising half-maximum crossing");
}

double advancement(const Signal& input, const Signal& output) {
    return peak_time(input) - peak_time(output);
}

double advancement_half_max(const Signal& input, const Signal& output) {
    return half_max_rise_time(input) - half_max_rise_time(output);
}

double excess_power_gain(const Signal& input, const Signal& output) {
    const double ein = energy(input);
    if (ein <= 0.0) throw std::invalid_argument("excess_power_gain: zero-energy input");
    return energy(output) / ein - 1.0;
}

Signal aligned_residual(const Signal& input, const Signal& output) {
    const double adv = advancement(input, output);
    const double peak_in = *std::max_element(input.samples.begin(), input.samples.end());
    const double peak_out = *std::max_element(output.samples.begin(), output.samples.end());
    if (peak_in <= 0.0 || peak_out <= 0.0)
        throw std::invalid_argument("aligned_residual: non-positive peak");

    Signal res;
    res.dt = input.dt;
    res.t0 = input.t0;
    res.samples.resize(input.samples.size());
    for (std::size_t i = 0; i < input.samples.size(); ++i) {
        const double t = input.time_at(i);
        // output shifted later by adv lines its peak up with the input's
        res.samples[i] = value_at(output, t - adv) / peak_out - input.samples[i] / peak_in;
    }
    return res;
}

double distortion(const Signal& input, const Signal& output) {
    const Signal res = aligned_residual(input, output);
    const double peak_in = *std::max_element(input.samples.begin(), input.samples.end());
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < res.samples.size(); ++i) {
        num += res.samples[i] * res.samples[i];
        const double v = input.samples[i] / peak_in;
        den += v * v;
    }
    if (den <= 0.0) throw std::invalid_argument("distortion: zero-energy input");
    return std::sqrt(num / den);
}

VelocityReport composite_velocity(double L, double t_d) {
    if (!(L > 0.0) || !std::isfinite(L))
        throw std::invalid_argument("composite_velocity: requires L > 0");
    if (!std::isfinite(t_d))
        throw std::invalid_argument("composite_velocity: t_d must be finite");
    VelocityReport rep;
    rep.L = L;
    rep.t_total = L / kSpeedOfLight + t_d;
    if (rep.t_total == 0.0)
        throw std::invalid_argument("composite_velocity: total transit time is zero "
                                    "(t_d = -L/c, velocity singular)");
    rep.v_g = L / rep.t_total;
    if (t_d >= 0.0)
        rep.classification = VelocityClass::Subluminal;
    else if (rep.t_total > 0.0)
        rep.classification = VelocityClass::Superluminal;
    else
        rep.classification = VelocityClass::Negative;
    return rep;
}

double max_gain_budget(double a, double b, int n) {
    if (!(a + b > 0.0)) throw std::invalid_argument("max_gain_budget: requires a + b > 0");
    if (n < 1) throw std::invalid_argument("max_gain_budget: requires n >= 1");
    return static_cast<double>(n) * std::log10(1.0 + 1.0 / (a + b));
}

MetricsReport measure(const Signal& input, const Signal& output,
                      std::optional<double> T_w) {
    MetricsReport rep;
    rep.peak_in = peak_time(input);
    rep.peak_out = peak_time(output);
    rep.advancement = rep.peak_in - rep.peak_out;
    rep.r = (T_w && *T_w > 0.0) ? rep.advancement / *T_w : 0.0;
    rep.eta = excess_power_gain(input, output);
    rep.distortion = distortion(input, output);
    double area_in = 0.0, area_out = 0.0;
    for (double v : input.samples) area_in += v;
    for (double v : output.samples) area_out += v;
    rep.gain_dc = (area_in != 0.0) ? area_out / area_in : 0.0;
    return rep;
}

std::string summary(const MetricsReport& rep) {
    std::ostringstream os;
    os << "advancement : " << csv::number(rep.advancement) << " s\n"
       << "r           : " << csv::number(rep.r) << '\n'
       << "eta         : " << csv::number(rep.eta) << '\n'
       << "distortion  : " << csv::number(rep.distortion) << '\n'
       << "peak_in     : " << csv::number(rep.peak_in) << " s\n"
       << "peak_out    : " << csv::number(rep.peak_out) << " s\n"
       << "gain_dc     : " << csv::number(rep.gain_dc) << '\n';
    return os.str();
}

void write_csv(const MetricsReport& rep, std::ostream& os) {
    os << "advancement,r,eta,distortion,peak_in,peak_out,gain_dc\n"
       << csv::number(rep.advancement) << ',' << csv::number(rep.r) << ','
       << csv::number(rep.eta) << ',' << csv::number(rep.distortion) << ','
       << csv::number(rep.peak_in) << ',' << csv::number(rep.peak_out) << ','
       << csv::number(rep.gain_dc) << '\n';
}

const char* to_string(VelocityClass c) {
    switch (c) {
    case VelocityClass::Subluminal: return "subluminal";
    case VelocityClass::Superluminal: return "superluminal";
    case VelocityClass::Negative: return "negative";
    }
    return "?";
}

} // namespace ngd
