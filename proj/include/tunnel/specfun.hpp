#pragma once

#include <functional>
#include <limits>

namespace tunnel::specfun {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Gamma function via a Lanczos approximation (g = 7, nine coefficients) with
/// reflection below 1/2. Throws DomainError at 0, -1, -2, ...
double gamma(double x);

/// Digamma psi(x) = Gamma'(x)/Gamma(x). Upward recurrence to x >= 10, then the
/// asymptotic series; reflection for negative arguments.
double digamma(double x);

/// Gauss hypergeometric series 2F1(a, b; c; x) for |x| < 1.
///
/// Summed term by term until the geometric tail bound falls below
/// rel_tol * |sum|. Throws NumericError carrying the partial sum when the
/// budget of max_terms runs out.
double gauss2f1(double a, double b, double c, double x, double rel_tol = 1e-12,
                int max_terms = 10000);

/// The three pieces of d/ds 2F1(s + 3/2, 1; s + 2; 3/4) at s = 0, obtained
/// from the Euler integral representation.
struct ParamDerivativeIntegrals {
    double i1;  // int_0^1 (1 - 3t/4)^(-3/2) dt
    double i2;  // int_0^1 (1 - 3t/4)^(-3/2) ln(1 - t) dt
    double i3;  // -int_0^1 (1 - 3t/4)^(-3/2) ln(1 - 3t/4) dt
    double error;

    double sum() const { return i1 + i2 + i3; }
};

ParamDerivativeIntegrals f_param_derivative_parts();

/// I1 + I2 + I3, computed by quadrature.
double f_param_derivative_at_zero();

struct QuadratureSpec {
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
    int max_subdivisions = 4000;
    /// Algebraic decay rate alpha of |f| ~ |x|^-alpha at infinite endpoints.
    /// Infinite tails are mapped to (0, 1] with x = a - 1 + t^(-1/(alpha-1)),
    /// which turns an x^-alpha tail into a bounded integrand.
    double tail_exponent = 2.0;

    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int subdivisions = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod (7/15) quadrature over [lo, hi]. Either
/// bound may be infinite. Throws NumericError when the tolerance is not met
/// within max_subdivisions or the integrand returns a non-finite value.
QuadratureResult integrate(const Integrand& f, double lo, double hi,
                           const QuadratureSpec& spec = {});

}  // namespace tunnel::specfun
