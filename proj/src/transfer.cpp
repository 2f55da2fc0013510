#include "ngd/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

namespace ngd {

namespace poly {

Complex eval(const std::vector<double>& coeffs, Complex x) {
    Complex acc(0.0, 0.0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Complex eval_derivative(const std::vector<double>& coeffs, Complex x) {
    Complex acc(0.0, 0.0);
    for (std::size_t k = coeffs.size(); k-- > 1;)
        acc = acc * x + static_cast<double>(k) * coeffs[k];
    return acc;
}

std::vector<double> multiply(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

std::vector<double> trim(std::vector<double> coeffs) {
    while (coeffs.size() > 1 && coeffs.back() == 0.0)
        coeffs.pop_back();
    if (coeffs.empty()) coeffs.push_back(0.0);
    return coeffs;
}

double norm1(const std::vector<double>& coeffs) {
    double s = 0.0;
    for (double c : coeffs) s += std::abs(c);
    return s;
}

std::vector<Complex> roots(const std::vector<double>& coeffs, double residual_tol) {
    const std::vector<double> p = trim(coeffs);
    const int deg = static_cast<int>(p.size()) - 1;
    if (deg == 0) return {};
    if (p[deg] == 0.0)
        throw NumericalError("roots: leading coefficient is zero after trimming");

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -p[i] / p[deg];

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
        throw NumericalError("roots: eigenvalue iteration failed");

    std::vector<Complex> out;
    out.reserve(deg);
    const double scale = norm1(p);
    for (int i = 0; i < deg; ++i) {
        Complex r(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
        // residual check against the scaled polynomial magnitude at the root
        double rmag = std::max(1.0, std::abs(r));
        double bound = residual_tol * scale * std::pow(rmag, deg);
        if (std::abs(eval(p, r)) > bound)
            throw NumericalError("roots: residual check failed at computed root");
        out.push_back(r);
    }
    return out;
}

} // namespace poly

namespace {

void require_finite(const std::vector<double>& coeffs, const char* what) {
    for (double c : coeffs)
        if (!std::isfinite(c))
            throw std::invalid_argument(std::string(what) + ": non-finite coefficient");
}

} // namespace

TransferFunction::TransferFunction(std::vector<double> numerator,
                                   std::vector<double> denominator)
    : num_(poly::trim(std::move(numerator))), den_(poly::trim(std::move(denominator))) {
    require_finite(num_, "TransferFunction numerator");
    require_finite(den_, "TransferFunction denominator");
    if (poly::norm1(den_) == 0.0)
        throw std::invalid_argument("TransferFunction: denominator is identically zero");
}

Complex TransferFunction::eval(double omega) const {
    if (!std::isfinite(omega))
        throw std::invalid_argument("eval: omega must be finite");
    const Complex p(0.0, omega);
    const Complex d = poly::eval(den_, p);
    if (std::abs(d) < 1e-300)
        throw PoleEvaluationError("eval: frequency coincides with a pole");
    return poly::eval(num_, p) / d;
}

double TransferFunction::amplitude(double omega) const { return std::abs(eval(omega)); }

double TransferFunction::phase(double omega) const { return std::arg(eval(omega)); }

double TransferFunction::group_delay(double omega) const {
    if (!std::isfinite(omega))
        throw std::invalid_argument("group_delay: omega must be finite");
    const Complex p(0.0, omega);
    const Complex n = poly::eval(num_, p);
    const Complex d = poly::eval(den_, p);
    if (std::abs(d) < 1e-300)
        throw PoleEvaluationError("group_delay: frequency coincides with a pole");
    if (std::abs(n) < 1e-300)
        throw UndefinedPhaseError("group_delay: response vanishes, phase undefined");
    // arg H(omega) differentiates to Re[N'/N - D'/D] at p = i*omega,
    // so the group delay is the denominator term minus the numerator term.
    const Complex dn = poly::eval_derivative(num_, p);
    const Complex dd = poly::eval_derivative(den_, p);
    return (dd / d - dn / n).real();
}

TransferFunction identity() { return TransferFunction({1.0}, {1.0}); }

TransferFunction lowpass_first_order(double T) {
    if (!(T > 0.0) || !std::isfinite(T))
        throw std::invalid_argument("lowpass_first_order: stability requires T > 0");
    return TransferFunction({1.0}, {1.0, T});
}

TransferFunction ngd_ideal(double T) {
    if (!std::isfinite(T))
        throw std::invalid_argument("ngd_ideal: T must be finite");
    return TransferFunction({1.0, T}, {1.0});
}

TransferFunction allpass(double T) {
    if (!(T > 0.0) || !std::isfinite(T))
        throw std::invalid_argument("allpass: stability requires T > 0");
    return TransferFunction({1.0, -T}, {1.0, T});
}

TransferFunction ngd_practical(double T, double a, double b) {
    if (!(T > 0.0) || !std::isfinite(T))
        throw std::invalid_argument("ngd_practical: requires T > 0");
    if (!(a >= 0.0) || !(b >= 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw std::invalid_argument("ngd_practical: requires a >= 0 and b >= 0");
    // (1 + i w aT)(1 + i w bT) in p
    std::vector<double> den = poly::multiply({1.0, a * T}, {1.0, b * T});
    std::vector<double> num = den;
    num[1] += T;
    return TransferFunction(std::move(num), std::move(den));
}

std::vector<double> bessel_polynomial(int m) {
    if (m < 1 || m > 12)
        throw std::invalid_argument("bessel_polynomial: order must be in [1, 12]");
    // Reverse-Bessel coefficients scaled so y_m(0) = 1 and y_m'(0) = 1:
    // a_k = (2m-k)! m! 2^k / ((m-k)! k! (2m)!), built by the term ratio
    // a_{k+1}/a_k = 2 (m-k) / ((2m-k)(k+1)).
    std::vector<double> a(static_cast<std::size_t>(m) + 1);
    a[0] = 1.0;
    for (int k = 0; k < m; ++k)
        a[k + 1] = a[k] * 2.0 * (m - k) / (static_cast<double>(2 * m - k) * (k + 1));
    return a;
}

double bessel_alpha(int m) {
    const std::vector<double> y = bessel_polynomial(m);
    auto excess = [&y](double u) {
        const Complex v = poly::eval(y, Complex(0.0, u));
        return std::norm(v) - 2.0;
    };
    double lo = 0.0, hi = 10.0;
    if (!(excess(hi) > 0.0))
        throw NumericalError("bessel_alpha: half-power crossing not bracketed in (0, 10]");
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

TransferFunction bessel(int m, double T_L) {
    if (m < 1 || m > 12)
        throw std::invalid_argument("bessel: order must be in [1, 12]");
    if (!(T_L > 0.0) || !std::isfinite(T_L))
        throw std::invalid_argument("bessel: requires T_L > 0");
    const double alpha = bessel_alpha(m);
    std::vector<double> den = bessel_polynomial(m);
    double scale = 1.0;
    for (auto& c : den) {
        c *= scale;
        scale *= alpha * T_L;
    }
    return TransferFunction({1.0}, std::move(den));
}

double cascaded_lowpass_alpha(int m) {
    if (m < 1)
        throw std::invalid_argument("cascaded_lowpass_alpha: order must be >= 1");
    return std::sqrt(std::exp2(1.0 / m) - 1.0);
}

TransferFunction cascaded_lowpass(int m, double T_L) {
    if (m < 1)
        throw std::invalid_argument("cascaded_lowpass: order must be >= 1");
    if (!(T_L > 0.0) || !std::isfinite(T_L))
        throw std::invalid_argument("cascaded_lowpass: requires T_L > 0");
    const double c = cascaded_lowpass_alpha(m) * T_L;
    std::vector<double> den{1.0};
    for (int i = 0; i < m; ++i)
        den = poly::multiply(den, {1.0, c});
    return TransferFunction({1.0}, std::move(den));
}

TransferFunction compose(const TransferFunction& f, const TransferFunction& g) {
    std::vector<double> num = poly::multiply(f.numerator(), g.numerator());
    std::vector<double> den = poly::multiply(f.denominator(), g.denominator());
    for (double c : num)
        if (!std::isfinite(c))
            throw NumericalError("compose: numerator coefficient overflow");
    for (double c : den)
        if (!std::isfinite(c))
            throw NumericalError("compose: denominator coefficient overflow");
    return TransferFunction(std::move(num), std::move(den));
}

StabilityReport stability(const TransferFunction& tf) {
    StabilityReport report;
    report.poles = poly::roots(tf.denominator());
    report.stable = std::all_of(report.poles.begin(), report.poles.end(),
                                [](const Complex& p) { return p.real() < 0.0; });
    return report;
}

double peak_gain(const TransferFunction& tf, double omega_min, double omega_max,
                 int grid_points) {
    if (!(omega_min < omega_max) || grid_points < 3)
        throw std::invalid_argument("peak_gain: bad search interval");
    const double step = (omega_max - omega_min) / (grid_points - 1);
    double best = -1.0;
    int best_i = 0;
    for (int i = 0; i < grid_points; ++i) {
        const double a = tf.amplitude(omega_min + i * step);
        if (a > best) { best = a; best_i = i; }
    }
    // golden-section refinement around the best grid sample
    double lo = omega_min + std::max(0, best_i - 1) * step;
    double hi = omega_min + std::min(grid_points - 1, best_i + 1) * step;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = tf.amplitude(x1);
    double f2 = tf.amplitude(x2);
    while (hi - lo > 1e-12 * (1.0 + std::abs(hi))) {
        if (f1 < f2) {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + gr * (hi - lo); f2 = tf.amplitude(x2);
        } else {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - gr * (hi - lo); f1 = tf.amplitude(x1);
        }
    }
    return std::max({best, f1, f2});
}

} // namespace ngd
