#include "tunnel/zetadet.hpp"

#include "tunnel/errors.hpp"
#include "tunnel/susyqm.hpp"

#include <cmath>
#include <sstream>

namespace tunnel {

using specfun::kInf;
using specfun::kPi;

namespace {

// The k-integrands below decay like |k|^-alpha (times at most a log). Mapping
// the tail with an exponent half a unit below alpha leaves a transformed
// integrand that vanishes at the mapped endpoint.
specfun::QuadratureSpec tail_mapped(const specfun::QuadratureSpec& spec, double alpha) {
    specfun::QuadratureSpec local = spec;
    local.tail_exponent = std::min(spec.tail_exponent, alpha - 0.5);
    if (!(local.tail_exponent > 1.0)) local.tail_exponent = 0.5 * (1.0 + alpha);
    return local;
}

void check_level(int ell) {
    if (ell < 1) throw DomainError("zeta_r: ell must be >= 1");
}

double bound_sum(int ell, double s) {
    const SusyLevel lv(ell);
    double sum = 0.0;
    for (int m = 1; m < ell; ++m) sum += std::pow(bound_energy(lv, m), -s);
    return sum;
}

ZetaEvaluation zeta_closed_form(double s) {
    using specfun::gamma;
    const double c = 3.0 / std::sqrt(kPi);
    const double hyper = specfun::gauss2f1(1.0, s + 1.5, s + 2.0, 0.75);
    const double value = std::pow(3.0, -s) -
                         c * std::pow(2.0, -(2.0 * s + 1.0)) * gamma(s + 0.5) / gamma(s + 1.0) -
                         c * std::pow(2.0, -(2.0 * s + 3.0)) * gamma(s + 1.5) / gamma(s + 2.0) * hyper;
    return {2, s, value, ZetaMethod::closed_form, 1e-12 * std::max(1.0, std::abs(value))};
}

ZetaEvaluation zeta_k_integral(int ell, double s, const specfun::QuadratureSpec& spec) {
    if (!(s > -0.5)) {
        std::ostringstream msg;
        msg << "zeta_r k_integral needs s > -1/2 for convergence, got s = " << s;
        throw DomainError(msg.str());
    }
    const SpectralDensity rho{SusyLevel(ell)};
    const double l2 = static_cast<double>(ell * ell);
    const auto r = specfun::integrate(
        [&](double k) { return rho(k) * std::pow(k * k + l2, -s); }, 0.0, kInf,
        tail_mapped(spec, 2.0 + 2.0 * s));
    return {ell, s, bound_sum(ell, s) + 2.0 * r.value, ZetaMethod::k_integral, 2.0 * r.error};
}

}  // namespace

std::string_view to_string(ZetaMethod m) {
    switch (m) {
        case ZetaMethod::closed_form: return "closed_form";
        case ZetaMethod::k_integral: return "k_integral";
        case ZetaMethod::heat_kernel_mellin: return "heat_kernel_mellin";
    }
    return "unknown";
}

ZetaEvaluation zeta_r(int ell, double s, ZetaMethod method, const specfun::QuadratureSpec& spec) {
    check_level(ell);
    switch (method) {
        case ZetaMethod::closed_form:
            if (ell != 2) throw DomainError("zeta_r: closed form is available for ell = 2 only");
            return zeta_closed_form(s);
        case ZetaMethod::k_integral: return zeta_k_integral(ell, s, spec);
        case ZetaMethod::heat_kernel_mellin: return heat_kernel_zeta_check(ell, s, spec);
    }
    throw DomainError("zeta_r: unknown method");
}

double zeta_r_prime0(int ell, const specfun::QuadratureSpec& spec) {
    check_level(ell);
    const SusyLevel lv(ell);
    double bound = 0.0;
    for (int m = 1; m < ell; ++m) bound += std::log(bound_energy(lv, m));
    const SpectralDensity rho(lv);
    const double l2 = static_cast<double>(ell * ell);
    const auto r = specfun::integrate([&](double k) { return rho(k) * std::log(k * k + l2); }, 0.0,
                                      kInf, tail_mapped(spec, 2.0));
    return -bound - 2.0 * r.value;
}

double zeta_r_prime0_hypergeometric() {
    const double f_prime = specfun::f_param_derivative_at_zero();
    return -std::log(3.0) + 8.0 * std::log(2.0) - 0.5 - 3.0 / 16.0 * f_prime;
}

double zeta_r_prime0_finite_difference(int ell, double step) {
    if (!(step > 0.0) || step >= 0.25) {
        throw DomainError("zeta_r_prime0_finite_difference: step must lie in (0, 1/4)");
    }
    specfun::QuadratureSpec spec;
    spec.abs_tol = 1e-15;
    spec.rel_tol = 1e-14;
    auto central = [&](double h) {
        return (zeta_r(ell, h, ZetaMethod::k_integral, spec).value -
                zeta_r(ell, -h, ZetaMethod::k_integral, spec).value) /
               (2.0 * h);
    };
    const double coarse = central(step);
    const double fine = central(0.5 * step);
    return (4.0 * fine - coarse) / 3.0;
}

double det_from_zeta(double zeta_prime_at_zero) { return std::exp(-zeta_prime_at_zero); }

double scale_determinant(double beta, double zeta_at_zero, double det) {
    if (!(beta > 0.0)) throw DomainError("scale_determinant: beta must be positive");
    return std::pow(beta, zeta_at_zero) * det;
}

DeterminantRatio determinant_ratio(int ell, const specfun::QuadratureSpec& spec) {
    DeterminantRatio out;
    out.ell = ell;
    out.zeta_at_zero = zeta_r(ell, 0.0, ZetaMethod::k_integral, spec).value;
    out.zeta_prime_at_zero = zeta_r_prime0(ell, spec);
    out.q_value = det_from_zeta(out.zeta_prime_at_zero);
    return out;
}

DeterminantRatio reduced_ratio_R(const DoubleWellParams& p, const specfun::QuadratureSpec& spec) {
    DeterminantRatio out = determinant_ratio(2, spec);
    out.omega = p.omega();
    out.r_value = scale_determinant(p.beta(), out.zeta_at_zero, out.q_value);
    return out;
}

double harmonic_amplitude(double nu, double T, AmplitudeForm form) {
    if (!(nu > 0.0) || !(T > 0.0)) throw DomainError("harmonic_amplitude: nu and T must be positive");
    const double x = nu * T;
    if (form == AmplitudeForm::asymptotic) {
        return std::exp(0.5 * std::log(nu / kPi) - 0.5 * x) * (1.0 + 0.5 * std::exp(-2.0 * x));
    }
    // ln(2 sinh x) = x + ln(1 - e^{-2x})
    const double log_two_sinh = x + std::log1p(-std::exp(-2.0 * x));
    return std::exp(0.5 * std::log(nu / kPi) - 0.5 * log_two_sinh);
}

double truncated_mode_product(double nu, double T, long N) {
    if (!(nu >= 0.0)) throw DomainError("truncated_mode_product: nu must be non-negative");
    if (!(T > 0.0)) throw DomainError("truncated_mode_product: T must be positive");
    if (N < 1) throw DomainError("truncated_mode_product: N must be >= 1");
    const double z2 = nu * nu * T * T / (kPi * kPi);
    double log_prod = 0.0;
    for (long j = N; j >= 1; --j) {
        const double dj = static_cast<double>(j);
        log_prod += std::log1p(z2 / (dj * dj));
    }
    return std::exp(-0.5 * log_prod) / std::sqrt(2.0 * kPi * T);
}

double heat_kernel_trace(int ell, double mu, const specfun::QuadratureSpec& spec) {
    check_level(ell);
    if (!(mu > 0.0)) throw DomainError("heat_kernel_trace: mu must be positive");
    const SusyLevel lv(ell);
    double bound = 0.0;
    for (int m = 1; m < ell; ++m) bound += std::exp(-bound_energy(lv, m) * mu);
    const SpectralDensity rho(lv);
    const double l2 = static_cast<double>(ell * ell);
    const auto r = specfun::integrate([&](double k) { return rho(k) * std::exp(-(k * k + l2) * mu); },
                                      0.0, kInf, tail_mapped(spec, 2.0));
    return bound + 2.0 * r.value;
}

ZetaEvaluation heat_kernel_zeta_check(int ell, double s, const specfun::QuadratureSpec& spec) {
    check_level(ell);
    if (!(s > 0.0)) {
        throw DomainError("heat_kernel_zeta_check: the Mellin integral needs s > 0");
    }
    specfun::QuadratureSpec outer = spec;
    outer.abs_tol = std::max(spec.abs_tol, 1e-11);
    outer.rel_tol = std::max(spec.rel_tol, 1e-10);

    // mu in (0, 1]: mu = v^(1/s) absorbs the mu^(s-1) weight.
    const auto head = specfun::integrate(
        [&](double v) {
            if (v == 0.0) return 0.0;
            return heat_kernel_trace(ell, std::pow(v, 1.0 / s), spec) / s;
        },
        0.0, 1.0, outer);
    // mu in [1, inf): K decays exponentially.
    const auto tail = specfun::integrate(
        [&](double mu) {
            const double k = heat_kernel_trace(ell, mu, spec);
            return k == 0.0 ? 0.0 : std::pow(mu, s - 1.0) * k;
        },
        1.0, kInf, outer);
    const double g = specfun::gamma(s);
    return {ell, s, (head.value + tail.value) / g, ZetaMethod::heat_kernel_mellin,
            (head.error + tail.error) / std::abs(g)};
}

}  // namespace tunnel
