#include "tunnel/instanton.hpp"

#include "tunnel/errors.hpp"

#include <algorithm>
#include <cmath>

namespace tunnel {

namespace {

double sech(double u) { return 1.0 / std::cosh(u); }

}  // namespace

DoubleWellParams::DoubleWellParams(double omega) : omega_(omega) {
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw DomainError("DoubleWellParams: omega must be a positive finite number");
    }
}

double potential(const DoubleWellParams& p, double x) {
    const double w = p.omega();
    const double q = x * x - 1.0;
    return w * w / 8.0 * q * q;
}

double potential_derivative(const DoubleWellParams& p, double x) {
    const double w = p.omega();
    return w * w / 2.0 * x * (x * x - 1.0);
}

double curvature(const DoubleWellParams& p, double x) {
    const double w = p.omega();
    return w * w / 2.0 * (3.0 * x * x - 1.0);
}

double profile(const InstantonConfig& c, double tau) {
    return std::tanh(c.params.omega() * (tau - c.tau_c) / 2.0);
}

double profile_derivative(const InstantonConfig& c, double tau) {
    const double half = c.params.omega() / 2.0;
    const double s = sech(half * (tau - c.tau_c));
    return half * s * s;
}

double profile_second_derivative(const InstantonConfig& c, double tau) {
    const double half = c.params.omega() / 2.0;
    const double u = half * (tau - c.tau_c);
    const double s = sech(u);
    return -2.0 * half * half * s * s * std::tanh(u);
}

double classical_action(const DoubleWellParams& p) { return p.classical_action(); }

specfun::QuadratureResult classical_action_numeric(const DoubleWellParams& p,
                                                   const specfun::QuadratureSpec& spec) {
    const InstantonConfig c{p, 0.0};
    const double window = 40.0 / p.omega();
    auto lagrangian = [&](double tau) {
        const double v = profile_derivative(c, tau);
        return 0.5 * v * v + potential(p, profile(c, tau));
    };
    return specfun::integrate(lagrangian, -window, window, spec);
}

double zero_mode(const InstantonConfig& c, double tau) {
    return profile_derivative(c, tau) / std::sqrt(c.params.classical_action());
}

double zero_mode_second_derivative(const InstantonConfig& c, double tau) {
    const double half = c.params.omega() / 2.0;
    const double u = half * (tau - c.tau_c);
    const double s = sech(u);
    const double t = std::tanh(u);
    // d^2/dtau^2 of half * sech^2(u)
    const double d2 = half * half * half * (4.0 * s * s * t * t - 2.0 * s * s * s * s);
    return d2 / std::sqrt(c.params.classical_action());
}

double stability_potential(const DoubleWellParams& p, double tau) {
    const double w = p.omega();
    const double s = sech(w * tau / 2.0);
    return w * w - 1.5 * w * w * s * s;
}

TrialPath instanton_path(const InstantonConfig& c) {
    return {[c](double t) { return profile(c, t); },
            [c](double t) { return profile_derivative(c, t); },
            [c](double t) { return profile_second_derivative(c, t); }};
}

EomResidual eom_residual(const DoubleWellParams& p, const TrialPath& path,
                         std::span<const double> tau_samples) {
    if (tau_samples.empty()) throw DomainError("eom_residual: no sample points");
    EomResidual r;
    for (double tau : tau_samples) {
        const double x = path.x(tau);
        const double first = path.dx(tau) - std::sqrt(2.0 * potential(p, x));
        const double second = path.ddx(tau) - potential_derivative(p, x);
        r.first_order = std::max(r.first_order, std::abs(first));
        r.second_order = std::max(r.second_order, std::abs(second));
    }
    return r;
}

EomResidual eom_residual(const InstantonConfig& c, std::span<const double> tau_samples) {
    return eom_residual(c.params, instanton_path(c), tau_samples);
}

double zero_mode_stability_residual(const InstantonConfig& c, std::span<const double> tau_samples) {
    double worst = 0.0;
    for (double tau : tau_samples) {
        const double v2 = curvature(c.params, profile(c, tau));
        const double r = -zero_mode_second_derivative(c, tau) + v2 * zero_mode(c, tau);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace tunnel
