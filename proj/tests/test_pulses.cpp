#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "ngd/pulses.hpp"

using namespace ngd;

namespace {

double value_near(const Signal& sig, double t) {
    const auto i = static_cast<std::size_t>(std::llround((t - sig.t0) / sig.dt));
    return sig.samples.at(i);
}

} // namespace

TEST_CASE("rectangular sampling with left-closed edges") {
    const Signal sig = sample({PulseKind::Rectangular, 1.0, 0.0}, 0.01, -1.0, 3.0);
    CHECK(sig.samples.size() == 401);
    CHECK(value_near(sig, 0.5) == 1.0);
    CHECK(value_near(sig, -0.5) == 0.0);
    CHECK(value_near(sig, 0.0) == 1.0);  // rising edge is high
    CHECK(value_near(sig, 1.0) == 0.0);  // falling edge is low
    CHECK(value_near(sig, 2.0) == 0.0);
}

TEST_CASE("truncated gaussian") {
    // peak of g at t0
    const Signal far = sample({PulseKind::TruncatedGaussian, 1.0, 3.0}, 0.01, -1.0, 8.0);
    CHECK(value_near(far, 3.0) == doctest::Approx(1.0));

    // truncation at t = 0 with t0 = T_w: jump from 0 to e^{-1/2}
    const Signal near = sample({PulseKind::TruncatedGaussian, 1.0, 1.0}, 0.01, -1.0, 8.0);
    CHECK(value_near(near, -0.01) == 0.0);
    CHECK(value_near(near, 0.0) == doctest::Approx(std::exp(-0.5)));

    // smoothed truncation ramps from 0 to the gaussian value
    const Signal smooth = sample({PulseKind::TruncatedGaussian, 1.0, 1.0, 1.0, 0.2},
                                 0.01, -1.0, 8.0);
    CHECK(value_near(smooth, 0.0) == 0.0);
    CHECK(value_near(smooth, 0.1) ==
          doctest::Approx(0.5 * std::exp(-0.5 * 0.81)));
    CHECK(value_near(smooth, 0.3) == doctest::Approx(std::exp(-0.5 * 0.49)));
}

TEST_CASE("sample input validation") {
    CHECK_THROWS_AS(sample({PulseKind::Gaussian, -1.0, 0.0}, 0.01, 0.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(sample({PulseKind::Gaussian, 1.0, 0.0}, 0.01, 1.0, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(sample({PulseKind::Gaussian, 1.0, 0.0}, 1e-9, 0.0, 100.0),
                    std::invalid_argument); // > 1e7 samples
    CHECK_THROWS_AS(sample({PulseKind::Gaussian, 1.0, 0.0}, 0.01,
                           -std::numeric_limits<double>::infinity(), 1.0),
                    std::invalid_argument);
}

TEST_CASE("gaussian spectrum matches the analytic transform") {
    const double T_w = 1.0;
    const Signal sig = sample({PulseKind::Gaussian, T_w, 0.0}, 0.01, -8.0, 8.0);
    const Spectrum sp = spectrum(sig, 4);
    for (std::size_t i = 0; i < sp.size(); ++i) {
        const double w = sp.omega_at(i);
        if (std::abs(w) > 3.0 / T_w) continue;
        const double expect = std::sqrt(2.0 * std::numbers::pi) * T_w *
                              std::exp(-0.5 * w * w * T_w * T_w);
        CHECK(std::abs(sp.values[i] - std::complex<double>(expect, 0.0)) < 1e-6 * expect);
    }
}

TEST_CASE("rectangular spectrum decays as 1/|omega|") {
    const double T_w = 1.0;
    const Signal sig = sample({PulseKind::Rectangular, T_w, 0.0}, 0.002, -1.0, 3.0);
    const Spectrum sp = spectrum(sig, 4);
    // |V(w)| = 2|sin(w T_w / 2)| / |w|: check the envelope against 2/|w|
    double worst = 0.0;
    for (std::size_t i = sp.size() / 2 + 1; i < sp.size(); ++i) {
        const double w = sp.omega_at(i);
        if (w < 5.0 || w > 200.0) continue;
        const double mag = std::abs(sp.values[i]);
        CHECK(mag <= 2.0 / w * 1.01);
        worst = std::max(worst, mag * w / 2.0);
    }
    CHECK(worst > 0.9); // the envelope is actually reached
}

TEST_CASE("all-zero signal has an all-zero spectrum") {
    Signal sig;
    sig.dt = 0.1;
    sig.t0 = 0.0;
    sig.samples.assign(100, 0.0);
    const Spectrum sp = spectrum(sig, 2);
    for (const auto& v : sp.values) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("Parseval and Hermitian symmetry") {
    const Signal sig = sample({PulseKind::TruncatedGaussian, 0.7, 2.0}, 0.01, -1.0, 9.0);
    const Spectrum sp = spectrum(sig, 2);

    double et = 0.0;
    for (double v : sig.samples) et += v * v;
    et *= sig.dt;
    double ew = 0.0;
    for (const auto& v : sp.values) ew += std::norm(v);
    ew *= sp.domega / (2.0 * std::numbers::pi);
    CHECK(ew == doctest::Approx(et).epsilon(1e-9));

    const std::size_t n = sp.size();
    double scale = 0.0;
    for (const auto& v : sp.values) scale = std::max(scale, std::abs(v));
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t j = n - i; // omega_at(j) == -omega_at(i)
        if (j >= n) continue;
        CHECK(std::abs(sp.values[i] - std::conj(sp.values[j])) < 1e-9 * scale);
    }
}

TEST_CASE("spectrum pad_factor validation") {
    const Signal sig = sample({PulseKind::Gaussian, 1.0, 0.0}, 0.1, -4.0, 4.0);
    CHECK_THROWS_AS(spectrum(sig, 0), std::invalid_argument);
    CHECK_THROWS_AS(spectrum(sig, 65), std::invalid_argument);
}

TEST_CASE("CSV serialization format") {
    Signal sig;
    sig.dt = 0.5;
    sig.t0 = -0.5;
    sig.samples = {0.0, 1.0 / 3.0, -2.0};
    std::ostringstream os;
    write_csv(sig, os);
    CHECK(os.str() == "t,v\n-0.5,0\n0,0.333333333333\n0.5,-2\n");
}
