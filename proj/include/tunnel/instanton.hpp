#pragma once

#include "tunnel/specfun.hpp"

#include <functional>
#include <span>

namespace tunnel {

/// Double well V(x) = (omega^2 / 8)(x^2 - 1)^2 in units m = hbar = 1.
class DoubleWellParams {
public:
    explicit DoubleWellParams(double omega);

    double omega() const { return omega_; }
    /// Euclidean action of one instanton, 2 omega / 3.
    double classical_action() const { return 2.0 * omega_ / 3.0; }
    /// Scale between the stability operator in tau and the unit-width operator
    /// in z = omega tau / 2.
    double beta() const { return omega_ * omega_ / 4.0; }

private:
    double omega_;
};

struct InstantonConfig {
    DoubleWellParams params;
    double tau_c = 0.0;
};

double potential(const DoubleWellParams& p, double x);
double potential_derivative(const DoubleWellParams& p, double x);
/// V''(x) = (omega^2 / 2)(3x^2 - 1).
double curvature(const DoubleWellParams& p, double x);

/// x_c(tau) = tanh(omega (tau - tau_c) / 2).
double profile(const InstantonConfig& c, double tau);
double profile_derivative(const InstantonConfig& c, double tau);
double profile_second_derivative(const InstantonConfig& c, double tau);

/// 2 omega / 3.
double classical_action(const DoubleWellParams& p);

/// The euclidean action integral of x'^2/2 + V(x) along the profile, by
/// quadrature over tau_c +- 40/omega.
specfun::QuadratureResult classical_action_numeric(const DoubleWellParams& p,
                                                   const specfun::QuadratureSpec& spec = {});

/// Normalized translation mode (1/sqrt(S)) dx_c/dtau.
double zero_mode(const InstantonConfig& c, double tau);
double zero_mode_second_derivative(const InstantonConfig& c, double tau);

/// omega^2 - (3 omega^2 / 2) sech^2(omega tau / 2), i.e. V'' along the
/// instanton centred at tau = 0.
double stability_potential(const DoubleWellParams& p, double tau);

/// A trial path with analytic first and second derivatives.
struct TrialPath {
    std::function<double(double)> x;
    std::function<double(double)> dx;
    std::function<double(double)> ddx;
};

TrialPath instanton_path(const InstantonConfig& c);

struct EomResidual {
    /// max |x' - sqrt(2 V(x))|, the zero-energy first integral.
    double first_order = 0.0;
    /// max |x'' - V'(x)|.
    double second_order = 0.0;
};

EomResidual eom_residual(const DoubleWellParams& p, const TrialPath& path,
                         std::span<const double> tau_samples);
EomResidual eom_residual(const InstantonConfig& c, std::span<const double> tau_samples);

/// max |-x0'' + V''(x_c) x0| over the samples.
double zero_mode_stability_residual(const InstantonConfig& c, std::span<const double> tau_samples);

}  // namespace tunnel
