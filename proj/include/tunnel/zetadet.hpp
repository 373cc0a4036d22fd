#pragma once

#include "tunnel/instanton.hpp"
#include "tunnel/specfun.hpp"

#include <optional>
#include <string_view>

namespace tunnel {

enum class ZetaMethod { closed_form, k_integral, heat_kernel_mellin };

std::string_view to_string(ZetaMethod m);

/// zeta_r(s) = zeta_{O_l}(s) - zeta_{P_l}(s) at one s.
struct ZetaEvaluation {
    int ell = 0;
    double s = 0.0;
    double value = 0.0;
    ZetaMethod method = ZetaMethod::k_integral;
    double error_estimate = 0.0;
};

/// Regularized zeta function of O_l relative to P_l:
///   sum_{m=1}^{l-1} E_m^-s + int rho_r(k) (k^2 + l^2)^-s dk.
///
/// k_integral needs s > -1/2; closed_form is the Gamma/hypergeometric form
/// and exists for l = 2 only; heat_kernel_mellin needs s > 0.
ZetaEvaluation zeta_r(int ell, double s, ZetaMethod method = ZetaMethod::k_integral,
                      const specfun::QuadratureSpec& spec = {});

/// zeta_r'(0) = -sum ln E_m - int rho_r(k) ln(k^2 + l^2) dk.
double zeta_r_prime0(int ell, const specfun::QuadratureSpec& spec = {});

/// l = 2 only: -ln 3 + 8 ln 2 - 1/2 - (3/16) F' with F' the s-derivative of
/// 2F1(s + 3/2, 1; s + 2; 3/4) at 0 from specfun.
double zeta_r_prime0_hypergeometric();

/// Central difference of the k_integral zeta at s = 0 with steps h and h/2,
/// combined by Richardson extrapolation.
double zeta_r_prime0_finite_difference(int ell, double step = 1e-4);

/// Det H = exp(-zeta'_H(0)).
double det_from_zeta(double zeta_prime_at_zero);

/// Det(beta H) = beta^zeta_H(0) Det H.
double scale_determinant(double beta, double zeta_at_zero, double det);

struct DeterminantRatio {
    int ell = 2;
    double q_value = 0.0;  // Det' O_l / Det P_l
    double zeta_at_zero = 0.0;
    double zeta_prime_at_zero = 0.0;
    std::optional<double> omega;
    std::optional<double> r_value;  // Det' of the tau-space stability operator / Det(-d^2 + omega^2)
};

/// Q_l from the zeta function.
DeterminantRatio determinant_ratio(int ell, const specfun::QuadratureSpec& spec = {});

/// R = beta^zeta_r(0) Q_2 with beta = omega^2 / 4; equals 1/(12 omega^2).
DeterminantRatio reduced_ratio_R(const DoubleWellParams& p, const specfun::QuadratureSpec& spec = {});

enum class AmplitudeForm { exact, asymptotic };

/// <0| exp(-H T) |0> for the oscillator of frequency nu:
/// sqrt(nu/pi) (2 sinh nu T)^(-1/2), evaluated in log space. The asymptotic
/// form keeps the first correction, sqrt(nu/pi) e^{-nu T/2} (1 + e^{-2 nu T}/2).
double harmonic_amplitude(double nu, double T, AmplitudeForm form = AmplitudeForm::exact);

/// Free-particle factor 1/sqrt(2 pi T) times prod_{j<=N} (1 + nu^2 T^2 / (j pi)^2)^(-1/2).
double truncated_mode_product(double nu, double T, long N);

/// Diagonal heat-kernel trace of O_l minus P_l:
///   K(mu) = sum_{m=1}^{l-1} e^{-E_m mu} + int rho_r(k) e^{-(k^2 + l^2) mu} dk,
/// with the k-integral done by quadrature.
double heat_kernel_trace(int ell, double mu, const specfun::QuadratureSpec& spec = {});

/// zeta_r(s) as the Mellin transform (1/Gamma(s)) int mu^{s-1} K(mu) dmu.
ZetaEvaluation heat_kernel_zeta_check(int ell, double s, const specfun::QuadratureSpec& spec = {});

}  // namespace tunnel
