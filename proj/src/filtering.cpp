#include "ngd/filtering.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ngd/csv.hpp"
#include "ngd/fft.hpp"

namespace ngd {

double CascadePlan::stage_time_constant() const {
    if (n < 1) throw std::invalid_argument("CascadePlan: n must be >= 1");
    if (!(T > 0.0)) throw std::invalid_argument("CascadePlan: T must be positive");
    return scaling == CascadeScaling::InverseSqrtN ? T / std::sqrt(static_cast<double>(n)) : T;
}

TransferFunction CascadePlan::stage_transfer() const {
    const double Ts = stage_time_constant();
    switch (stage) {
    case StageKind::NgdIdeal: return ngd_ideal(Ts);
    case StageKind::NgdPractical: return ngd_practical(Ts, a, b);
    }
    throw std::invalid_argument("CascadePlan: unknown stage kind");
}

namespace {

// One padded-grid pass; returns the wraparound energy fraction through `leak`.
Signal apply_padded(const TransferFunction& tf, const Signal& sig,
                    std::size_t npad, double& leak) {
    const std::size_t n = sig.samples.size();
    std::vector<std::complex<double>> buf(npad, {0.0, 0.0});
    for (std::size_t i = 0; i < n; ++i) buf[i] = sig.samples[i];
    fft::transform(buf, /*inverse=*/false);

    const double domega = 2.0 * std::numbers::pi / (static_cast<double>(npad) * sig.dt);
    for (std::size_t k = 0; k < npad; ++k) {
        const double idx = (k <= npad / 2) ? static_cast<double>(k)
                                           : static_cast<double>(k) - static_cast<double>(npad);
        buf[k] *= tf.eval(idx * domega);
    }
    fft::transform(buf, /*inverse=*/true);

    double total = 0.0, tail = 0.0;
    for (std::size_t i = 0; i < npad; ++i) {
        const double e = std::norm(buf[i]);
        total += e;
        if (i >= npad - npad / 4) tail += e;
    }
    leak = (total > 0.0) ? tail / total : 0.0;

    Signal out;
    out.dt = sig.dt;
    out.t0 = sig.t0;
    out.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.samples[i] = buf[i].real();
    return out;
}

} // namespace

Signal apply(const TransferFunction& tf, const Signal& sig, const ApplyOptions& opts) {
    if (sig.samples.empty() || !(sig.dt > 0.0))
        throw std::invalid_argument("apply: invalid signal");
    for (double v : sig.samples)
        if (!std::isfinite(v)) throw std::invalid_argument("apply: non-finite sample");
    if (!opts.allow_unstable && !stability(tf).stable)
        throw UnstableFilterError("apply: transfer function is unstable "
                                  "(set allow_unstable to override)");

    int pad = std::max(1, opts.initial_pad_factor);
    for (; pad <= 64; pad *= 2) {
        const std::size_t npad =
            fft::next_pow2(sig.samples.size() * static_cast<std::size_t>(pad));
        double leak = 0.0;
        Signal out = apply_padded(tf, sig, npad, leak);
        if (leak < 1e-8) return out;
    }
    throw WraparoundError("apply: circular wraparound above 1e-8 of total energy "
                          "even at 64x padding; enlarge the signal window");
}

std::vector<Signal> run_cascade(const CascadePlan& plan, const Signal& sig) {
    const TransferFunction stage = plan.stage_transfer();
    double peak_in = 0.0;
    for (double v : sig.samples) peak_in = std::max(peak_in, std::abs(v));

    std::vector<Signal> stages;
    stages.reserve(static_cast<std::size_t>(plan.n));
    const Signal* current = &sig;
    for (int k = 1; k <= plan.n; ++k) {
        stages.push_back(apply(stage, *current));
        double peak = 0.0;
        for (double v : stages.back().samples) peak = std::max(peak, std::abs(v));
        if (peak > 1e12 * peak_in)
            throw NumericalError("run_cascade: amplitude overflow at stage " +
                                 std::to_string(k) + " (out-of-band gain blowup)");
        current = &stages.back();
    }
    return stages;
}

void write_cascade_csv(const Signal& input, const std::vector<Signal>& stages,
                       std::ostream& os) {
    os << "t,stage0";
    for (std::size_t s = 1; s <= stages.size(); ++s) os << ",stage" << s;
    os << '\n';
    for (std::size_t i = 0; i < input.samples.size(); ++i) {
        os << csv::number(input.time_at(i)) << ',' << csv::number(input.samples[i]);
        for (const Signal& s : stages) os << ',' << csv::number(s.samples[i]);
        os << '\n';
    }
}

} // namespace ngd
