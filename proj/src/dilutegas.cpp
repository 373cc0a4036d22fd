#include "tunnel/dilutegas.hpp"

#include "tunnel/errors.hpp"
#include "tunnel/specfun.hpp"

#include <cmath>

namespace tunnel {

using specfun::kPi;

double instanton_density(const DoubleWellParams& p) {
    const double s = p.classical_action();
    return std::sqrt(6.0 / kPi) * std::sqrt(s) * std::exp(-s);
}

double collective_volume(int j, const DoubleWellParams& p, double T) {
    if (j < 0) throw DomainError("collective_volume: j must be non-negative");
    if (!(T > 0.0)) throw DomainError("collective_volume: T must be positive");
    if (j == 0) return 1.0;
    const double x = p.omega() * T;
    return std::exp(j * std::log(x) - std::lgamma(j + 1.0));
}

double transition_amplitude(const DoubleWellParams& p, double T, Endpoints endpoints,
                            std::optional<int> truncation) {
    if (!(T > 0.0)) throw DomainError("transition_amplitude: T must be positive");
    const double w = p.omega();
    const double prefactor = std::sqrt(w / kPi) * std::exp(-w * T / 2.0);
    const double x = w * T * instanton_density(p);
    if (!truncation) {
        return prefactor * (endpoints == Endpoints::opposite ? std::sinh(x) : std::cosh(x));
    }
    if (*truncation < 1) throw DomainError("transition_amplitude: truncation must be >= 1");
    // Terms x^n / n! with n = 1, 3, 5, ... or n = 0, 2, 4, ...
    int n = endpoints == Endpoints::opposite ? 1 : 0;
    double term = endpoints == Endpoints::opposite ? x : 1.0;
    double sum = 0.0;
    for (int i = 0; i < *truncation; ++i) {
        sum += term;
        term *= x * x / ((n + 1.0) * (n + 2.0));
        n += 2;
    }
    return prefactor * sum;
}

SplittingReport level_energies(const DoubleWellParams& p) {
    SplittingReport r;
    r.omega = p.omega();
    r.d = instanton_density(p);
    const double half_split = p.omega() * r.d;
    r.E0_inst = p.omega() / 2.0 - half_split;
    r.E1_inst = p.omega() / 2.0 + half_split;
    return r;
}

double validity_diagnostic(const DoubleWellParams& p, double T) {
    if (!(T > 0.0)) throw DomainError("validity_diagnostic: T must be positive");
    return p.omega() * T * instanton_density(p);
}

SplittingReport compare_with_oracle(const DoubleWellParams& p, std::optional<GridSpec> spec) {
    SplittingReport r = level_energies(p);
    const GridSpec grid = spec.value_or(default_splitting_grid(p));
    const PhysicalSplitting oracle = physical_splitting(p, grid, 1e-3, 6);
    r.E0_oracle = oracle.E0;
    r.E1_oracle = oracle.E1;
    r.oracle_points = oracle.points;
    r.oracle_relative_shift = oracle.relative_shift;
    r.ratio = (oracle.E1 - oracle.E0) / r.splitting_inst();
    return r;
}

}  // namespace tunnel
