#pragma once

#include "tunnel/instanton.hpp"
#include "tunnel/oracle.hpp"

#include <optional>

namespace tunnel {

struct SplittingReport {
    double omega = 0.0;
    double d = 0.0;  // instanton density
    double E0_inst = 0.0;
    double E1_inst = 0.0;
    std::optional<double> E0_oracle;
    std::optional<double> E1_oracle;
    std::optional<double> ratio;  // (E1 - E0)_oracle / (E1 - E0)_inst
    std::optional<int> oracle_points;
    std::optional<double> oracle_relative_shift;

    double splitting_inst() const { return E1_inst - E0_inst; }
};

/// d = sqrt(6/pi) sqrt(S) e^{-S}, S = 2 omega / 3; equal to 2 sqrt(omega/pi) e^{-2 omega/3}.
double instanton_density(const DoubleWellParams& p);

/// Ordered-centre volume (omega T)^j / j!.
double collective_volume(int j, const DoubleWellParams& p, double T);

enum class Endpoints { opposite, same };

/// Dilute-gas amplitude sqrt(omega/pi) e^{-omega T/2} times sinh(omega T d)
/// (opposite wells) or cosh(omega T d) (same well). With a truncation the
/// series is cut after that many terms (odd powers for sinh, even for cosh).
double transition_amplitude(const DoubleWellParams& p, double T, Endpoints endpoints,
                            std::optional<int> truncation = std::nullopt);

/// E0,1 = omega/2 -+ omega d.
SplittingReport level_energies(const DoubleWellParams& p);

/// omega T d, the expansion parameter of the single-instanton amplitude.
double validity_diagnostic(const DoubleWellParams& p, double T);

/// level_energies plus the grid oracle, refining the grid (doubling N) until
/// the oracle splitting moves by less than 1e-3 relative.
SplittingReport compare_with_oracle(const DoubleWellParams& p,
                                    std::optional<GridSpec> spec = std::nullopt);

}  // namespace tunnel
