#pragma once

#include "tunnel/instanton.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace tunnel {

/// Dirichlet box [-L, L] with N interior points, h = 2L / (N + 1).
/// kinetic_coefficient is 1 for stability operators (-d^2 + W) and 1/2 for the
/// physical Hamiltonian (-d^2/2 + V).
struct GridSpec {
    double half_width = 10.0;
    int points = 2000;
    double kinetic_coefficient = 1.0;

    void validate() const;
    double spacing() const { return 2.0 * half_width / (points + 1); }
    std::vector<double> nodes() const;
};

struct TridiagonalOperator {
    GridSpec spec;
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;  // size points - 1
    /// Potential samples behind the diagonal, when the operator came from
    /// discretize(); lets the Sturm count avoid the large 2c + V rounding.
    std::vector<double> potential;
};

struct GridEigenSystem {
    GridSpec spec;
    std::vector<double> eigenvalues;                // ascending
    std::vector<std::vector<double>> eigenvectors;  // unit 2-norm, empty unless requested
};

/// Central-difference Laplacian scaled by the kinetic coefficient plus the
/// diagonal potential.
TridiagonalOperator discretize(std::span<const double> potential_samples, const GridSpec& spec);
TridiagonalOperator discretize(const std::function<double(double)>& potential, const GridSpec& spec);

/// The `count` smallest eigenvalues by Sturm-sequence bisection, with
/// eigenvectors by inverse iteration when requested.
GridEigenSystem lowest_eigenvalues(const TridiagonalOperator& op, int count,
                                   bool with_eigenvectors = false);

/// sum_i v_i v_{N-1-i} / sum_i v_i^2: +1 for even, -1 for odd vectors.
double reflection_overlap(std::span<const double> v);

using Potential = std::function<double(double)>;

/// Dirichlet determinant ratio Det(-d^2 + W_a) / Det(-d^2 + W_b) on
/// [-T/2, T/2]: u'' = W u, u(-T/2) = 0, u'(-T/2) = 1, ratio u_a(T/2) / u_b(T/2).
/// The state is rescaled after every step and its log magnitude carried
/// separately, so exponentially growing solutions do not overflow.
double gelfand_yaglom_ratio(const Potential& a, const Potential& b, double T,
                            double rel_tol = 1e-10);

struct BoxReducedRatio {
    double value = 0.0;     // Det' O_l / Det P_l in the box
    double lambda0 = 0.0;   // smallest grid eigenvalue of O_l
    double lambda1 = 0.0;   // next grid eigenvalue
    double gy_ratio = 0.0;  // full Dirichlet ratio Det O_l / Det P_l
};

/// Finite-box estimate of Q_l = Det' O_l / Det P_l on [-L, L].
///
/// The zero mode is divided out through the spectral shift: in the box
/// Det(O - e) = (lambda0 - e) prod_{j>=1} (lambda_j - e), so
/// Det O / lambda0 = -d/de Det(O - e) at e = 0 up to O(lambda0). The shift
/// derivative comes from the variational equation of the same initial value
/// problem. The grid spectrum supplies lambda0, lambda1 and the isolation
/// check |lambda0| < |lambda1| / 2.
BoxReducedRatio box_reduced_ratio(int ell, double L, int points);

struct PhysicalSplitting {
    double E0 = 0.0;
    double E1 = 0.0;
    int points = 0;             // grid used for the returned values
    double relative_shift = 0.0;  // |dE(N) - dE(N/2)| / dE
};

/// Two lowest eigenvalues of -d^2/2 + V for the double well. The grid is
/// doubled up to max_doublings times until the splitting moves by less than
/// rel_tol; throws AccuracyError otherwise.
PhysicalSplitting physical_splitting(const DoubleWellParams& p, const GridSpec& spec,
                                     double rel_tol = 1e-3, int max_doublings = 0);

/// Box and resolution satisfying the well-resolution rule for this omega.
GridSpec default_splitting_grid(const DoubleWellParams& p);

}  // namespace tunnel
