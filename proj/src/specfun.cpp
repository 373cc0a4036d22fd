#include "tunnel/specfun.hpp"

#include "tunnel/errors.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace tunnel::specfun {

namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

void check_pole(double x, const char* who) {
    if (x <= 0.0 && x == std::floor(x)) {
        std::ostringstream msg;
        msg << who << ": pole at x = " << x;
        throw DomainError(msg.str());
    }
}

}  // namespace

double gamma(double x) {
    check_pole(x, "gamma");
    if (x < 0.5) {
        return kPi / (std::sin(kPi * x) * gamma(1.0 - x));
    }
    const double z = x - 1.0;
    double series = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        series += kLanczos[i] / (z + static_cast<double>(i));
    }
    const double t = z + kLanczosG + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * series;
}

double digamma(double x) {
    check_pole(x, "digamma");
    if (x < 0.0) {
        // psi(1 - x) - psi(x) = pi cot(pi x)
        return digamma(1.0 - x) - kPi / std::tan(kPi * x);
    }
    double shift = 0.0;
    while (x < 10.0) {
        shift -= 1.0 / x;
        x += 1.0;
    }
    const double inv2 = 1.0 / (x * x);
    // Bernoulli tail: -sum B_2n / (2n x^2n)
    const double tail =
        inv2 * (1.0 / 12.0 -
                inv2 * (1.0 / 120.0 -
                        inv2 * (1.0 / 252.0 - inv2 * (1.0 / 240.0 - inv2 * (1.0 / 132.0)))));
    return shift + std::log(x) - 0.5 / x - tail;
}

double gauss2f1(double a, double b, double c, double x, double rel_tol, int max_terms) {
    check_pole(c, "gauss2f1 (parameter c)");
    if (!(std::abs(x) < 1.0)) {
        throw DomainError("gauss2f1: series requires |x| < 1");
    }
    double term = 1.0;
    double sum = 1.0;
    for (int n = 0; n < max_terms; ++n) {
        const double dn = static_cast<double>(n);
        const double ratio = (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
        term *= ratio;
        sum += term;
        if (term == 0.0) return sum;
        // Once the term ratio settles below one the remainder is bounded by a
        // geometric series with the current ratio.
        const double r = std::abs(ratio);
        if (r < 1.0) {
            const double next = (a + dn + 1.0) * (b + dn + 1.0) / ((c + dn + 1.0) * (dn + 2.0)) * x;
            const double rn = std::max(r, std::abs(next));
            if (rn < 1.0 && std::abs(term) * rn / (1.0 - rn) <= rel_tol * std::abs(sum)) {
                return sum;
            }
        }
    }
    std::ostringstream msg;
    msg << "gauss2f1(" << a << ", " << b << ", " << c << ", " << x << ") not converged after "
        << max_terms << " terms";
    throw NumericError(msg.str(), sum, std::abs(term));
}

ParamDerivativeIntegrals f_param_derivative_parts() {
    QuadratureSpec spec;
    spec.abs_tol = 1e-14;
    spec.rel_tol = 1e-13;

    auto weight = [](double t) { return std::pow(1.0 - 0.75 * t, -1.5); };

    const QuadratureResult r1 = integrate(weight, 0.0, 1.0, spec);
    const QuadratureResult r3 = integrate(
        [&](double t) { return -weight(t) * std::log1p(-0.75 * t); }, 0.0, 1.0, spec);

    // I2 has ln(1 - t) at t = 1. Quadrature up to 1 - eps; on [1 - eps, 1]
    // expand the weight about t = 1 (u = 1 - t): w = 8 (1 + 3u)^(-3/2) and
    // integrate u^j ln u exactly.
    constexpr double eps = 1e-3;
    const QuadratureResult r2 = integrate(
        [&](double t) { return weight(t) * std::log1p(-t); }, 0.0, 1.0 - eps, spec);
    double tail = 0.0;
    double coeff = 8.0;  // 8 * binom(-3/2, j) * 3^j
    const double log_eps = std::log(eps);
    for (int j = 0; j < 12; ++j) {
        const double jp1 = static_cast<double>(j + 1);
        tail += coeff * std::pow(eps, jp1) * (log_eps / jp1 - 1.0 / (jp1 * jp1));
        coeff *= 3.0 * (-1.5 - static_cast<double>(j)) / jp1;
    }

    return {r1.value, r2.value + tail, r3.value, r1.error + r2.error + r3.error};
}

double f_param_derivative_at_zero() { return f_param_derivative_parts().sum(); }

}  // namespace tunnel::specfun
