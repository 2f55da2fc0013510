#pragma once

#include <complex>
#include <vector>

#include "ngd/errors.hpp"

namespace ngd {

using Complex = std::complex<double>;

namespace poly {

/// Evaluate a real-coefficient polynomial (ascending powers) at a complex point.
Complex eval(const std::vector<double>& coeffs, Complex x);

/// Evaluate the derivative of the polynomial at a complex point.
Complex eval_derivative(const std::vector<double>& coeffs, Complex x);

/// Coefficient-wise product of two polynomials.
std::vector<double> multiply(const std::vector<double>& a, const std::vector<double>& b);

/// Drop trailing (near-)zero coefficients; never returns an empty vector.
std::vector<double> trim(std::vector<double> coeffs);

/// Sum of absolute coefficient values.
double norm1(const std::vector<double>& coeffs);

/// Roots via companion-matrix eigenvalues. Throws NumericalError if any
/// root fails the residual check |P(root)| < tol * norm1(P).
std::vector<Complex> roots(const std::vector<double>& coeffs, double residual_tol = 1e-8);

} // namespace poly

/// Rational function of p = i*omega*(1 s). Real coefficients, ascending
/// powers of p, so a time constant T in seconds enters directly as the
/// coefficient of p. Stability in this plane means Re(pole) < 0, which is
/// the usual left-half-plane condition.
class TransferFunction {
public:
    TransferFunction(std::vector<double> numerator, std::vector<double> denominator);

    const std::vector<double>& numerator() const { return num_; }
    const std::vector<double>& denominator() const { return den_; }

    int numerator_degree() const { return static_cast<int>(num_.size()) - 1; }
    int denominator_degree() const { return static_cast<int>(den_.size()) - 1; }

    /// Frequency response H(omega) = N(i*omega)/D(i*omega), omega in rad/s.
    /// Throws PoleEvaluationError when evaluated at a pole.
    Complex eval(double omega) const;

    double amplitude(double omega) const;
    double phase(double omega) const;

    /// Analytic group delay -d(arg H)/d(omega) in seconds, computed from the
    /// logarithmic derivatives of numerator and denominator.
    double group_delay(double omega) const;

private:
    std::vector<double> num_;
    std::vector<double> den_;
};

struct StabilityReport {
    bool stable = false;
    std::vector<Complex> poles; // p-plane denominator roots
};

/// H = 1 (unit gain, zero delay).
TransferFunction identity();

/// First-order lowpass 1/(1 + i*omega*T). Requires T > 0.
TransferFunction lowpass_first_order(double T);

/// Single-zero negative-delay element 1 + i*omega*T. Any finite T.
TransferFunction ngd_ideal(double T);

/// All-pass (1 - i*omega*T)/(1 + i*omega*T). Requires T > 0.
TransferFunction allpass(double T);

/// Practical negative-delay circuit
///   1 + i*omega*T / ((1 + i*omega*a*T)(1 + i*omega*b*T)).
/// Requires T > 0, a >= 0, b >= 0. a = b = 0 degenerates to ngd_ideal
/// (unbounded out-of-band gain).
TransferFunction ngd_practical(double T, double a, double b);

/// m-th order Bessel lowpass 1/y_m(i*omega*alpha_m*T_L), normalized so the
/// amplitude at omega = 1/T_L is exactly 1/sqrt(2). Supports m in [1, 12].
TransferFunction bessel(int m, double T_L);

/// m identical first-order lowpass sections, 1/(1 + i*omega*alpha_m*T_L)^m
/// with alpha_m = sqrt(2^(1/m) - 1) keeping the half-power cutoff at 1/T_L.
TransferFunction cascaded_lowpass(int m, double T_L);

/// Product composition: eval(compose(f,g), w) = eval(f,w) * eval(g,w).
TransferFunction compose(const TransferFunction& f, const TransferFunction& g);

/// Denominator roots and the left-half-plane stability verdict.
StabilityReport stability(const TransferFunction& tf);

/// Bessel polynomial y_m in the unit-delay normalization (y_m(0) = 1,
/// y_m'(0) = 1); y_2(x) = 1 + x + x^2/3.
std::vector<double> bessel_polynomial(int m);

/// Cutoff normalization for bessel(): the u > 0 solving |y_m(iu)|^2 = 2,
/// found by bisection to 1e-12.
double bessel_alpha(int m);

/// sqrt(2^(1/m) - 1).
double cascaded_lowpass_alpha(int m);

/// Maximum of |H| over [omega_min, omega_max]: dense grid scan followed by
/// golden-section refinement.
double peak_gain(const TransferFunction& tf, double omega_min, double omega_max,
                 int grid_points = 4096);

} // namespace ngd
