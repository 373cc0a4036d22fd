#include "tunnel/oracle.hpp"

#include "tunnel/errors.hpp"
#include "tunnel/susyqm.hpp"

#include <boost/numeric/odeint.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace tunnel {

namespace odeint = boost::numeric::odeint;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Number of eigenvalues strictly below x (Sturm count of the LDL^T pivots).
int sturm_count(const TridiagonalOperator& op, double x) {
    if (!op.potential.empty()) {
        // Pivots q_i = c (1 + t_i) of 2c + V_i - x with off-diagonal -c:
        // t_i = (V_i - x)/c + t_{i-1}/(1 + t_{i-1}), free of the 2c - 2c cancellation.
        const double c = -op.off_diagonal.front();
        const auto& v = op.potential;
        int count = 0;
        double t = 1.0 + (v[0] - x) / c;
        if (1.0 + t < 0.0) ++count;
        for (std::size_t i = 1; i < v.size(); ++i) {
            double p = 1.0 + t;
            if (p == 0.0) p = kEps;
            t = (v[i] - x) / c + t / p;
            if (1.0 + t < 0.0) ++count;
        }
        return count;
    }
    const auto& d = op.diagonal;
    const auto& e = op.off_diagonal;
    int count = 0;
    double q = d[0] - x;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < d.size(); ++i) {
        if (q == 0.0) q = kEps * (std::abs(e[i - 1]) + kEps);
        q = d[i] - x - e[i - 1] * e[i - 1] / q;
        if (q < 0.0) ++count;
    }
    return count;
}

// Solve (T - shift) x = b in place with partial pivoting.
void solve_shifted(const TridiagonalOperator& op, double shift, std::vector<double>& b) {
    const std::size_t n = op.diagonal.size();
    std::vector<double> d(n), du(op.off_diagonal), dl(op.off_diagonal), du2(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) d[i] = op.diagonal[i] - shift;
    const double tiny = kEps * (std::abs(shift) + 1.0);

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (d[i] == 0.0) d[i] = tiny;
            const double fact = dl[i] / d[i];
            d[i + 1] -= fact * du[i];
            b[i + 1] -= fact * b[i];
            du2[i] = 0.0;
        } else {
            const double fact = d[i] / dl[i];
            d[i] = dl[i];
            const double temp = d[i + 1];
            d[i + 1] = du[i] - fact * temp;
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du2[i];
            }
            du[i] = temp;
            const double bt = b[i];
            b[i] = b[i + 1];
            b[i + 1] = bt - fact * b[i + 1];
        }
    }
    if (d[n - 1] == 0.0) d[n - 1] = tiny;
    b[n - 1] /= d[n - 1];
    if (n >= 2) b[n - 2] = (b[n - 2] - du[n - 2] * b[n - 1]) / d[n - 2];
    for (std::size_t k = n - 2; k-- > 0;) {
        b[k] = (b[k] - du[k] * b[k + 1] - du2[k] * b[k + 2]) / d[k];
    }
}

void normalize(std::vector<double>& v) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    for (double& x : v) x /= norm;
}

using OdeState = std::array<double, 4>;

struct Shot {
    double log_scale = 0.0;  // state = exp(log_scale) * stored
    OdeState state{};
};

// u'' = (W - shift) u, w'' = (W - shift) w - u, from u(a) = 0, u'(a) = 1, w = w' = 0.
Shot shoot(const Potential& W, double a, double b, double shift, double rel_tol) {
    auto rhs = [&](const OdeState& y, OdeState& dy, double t) {
        const double v = W(t) - shift;
        dy[0] = y[1];
        dy[1] = v * y[0];
        dy[2] = y[3];
        dy[3] = v * y[2] - y[0];
    };
    auto stepper = odeint::make_controlled(rel_tol * 1e-3, rel_tol,
                                           odeint::runge_kutta_fehlberg78<OdeState>());
    Shot shot;
    shot.state = {0.0, 1.0, 0.0, 0.0};
    double t = a;
    double dt = std::min(1e-3, (b - a) / 16.0);
    constexpr long kMaxAttempts = 5'000'000;
    for (long attempt = 0; t < b; ++attempt) {
        if (attempt >= kMaxAttempts) {
            throw NumericError("Gelfand-Yaglom integration exceeded its step budget", std::nan(""),
                               b - t);
        }
        dt = std::min(dt, b - t);
        if (stepper.try_step(rhs, shot.state, t, dt) == odeint::success) {
            double scale = 0.0;
            for (double x : shot.state) scale = std::max(scale, std::abs(x));
            if (!std::isfinite(scale) || scale == 0.0) {
                throw NumericError("Gelfand-Yaglom integration produced a non-finite state",
                                   std::nan(""), b - t);
            }
            for (double& x : shot.state) x /= scale;
            shot.log_scale += std::log(scale);
        } else if (dt < 1e-14 * std::max(1.0, std::abs(t))) {
            throw NumericError("Gelfand-Yaglom step size underflow", std::nan(""), b - t);
        }
    }
    return shot;
}

}  // namespace

// ---------------------------------------------------------------- grid

void GridSpec::validate() const {
    if (!(half_width > 0.0)) throw DomainError("GridSpec: half_width must be positive");
    if (points < 16) throw DomainError("GridSpec: at least 16 interior points are required");
    if (kinetic_coefficient != 0.5 && kinetic_coefficient != 1.0) {
        throw DomainError("GridSpec: kinetic_coefficient must be 1/2 or 1");
    }
}

std::vector<double> GridSpec::nodes() const {
    const double h = spacing();
    std::vector<double> x(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) x[i] = -half_width + (i + 1) * h;
    return x;
}

TridiagonalOperator discretize(std::span<const double> potential_samples, const GridSpec& spec) {
    spec.validate();
    if (potential_samples.size() != static_cast<std::size_t>(spec.points)) {
        std::ostringstream msg;
        msg << "discretize: " << potential_samples.size() << " potential samples for "
            << spec.points << " grid points";
        throw DomainError(msg.str());
    }
    const double h = spec.spacing();
    const double c = spec.kinetic_coefficient / (h * h);
    TridiagonalOperator op{spec, {}, {}, {}};
    op.diagonal.resize(potential_samples.size());
    for (std::size_t i = 0; i < potential_samples.size(); ++i) {
        op.diagonal[i] = 2.0 * c + potential_samples[i];
    }
    op.off_diagonal.assign(potential_samples.size() - 1, -c);
    op.potential.assign(potential_samples.begin(), potential_samples.end());
    return op;
}

TridiagonalOperator discretize(const std::function<double(double)>& potential, const GridSpec& spec) {
    spec.validate();
    std::vector<double> samples = spec.nodes();
    for (double& x : samples) x = potential(x);
    return discretize(samples, spec);
}

GridEigenSystem lowest_eigenvalues(const TridiagonalOperator& op, int count, bool with_eigenvectors) {
    const int n = static_cast<int>(op.diagonal.size());
    if (count < 1 || count > n) throw DomainError("lowest_eigenvalues: count must lie in [1, points]");

    // Gershgorin interval.
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < n; ++i) {
        double radius = 0.0;
        if (i > 0) radius += std::abs(op.off_diagonal[i - 1]);
        if (i + 1 < n) radius += std::abs(op.off_diagonal[i]);
        lo = std::min(lo, op.diagonal[i] - radius);
        hi = std::max(hi, op.diagonal[i] + radius);
    }
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw NumericError("lowest_eigenvalues: operator has non-finite entries", std::nan(""), 0.0);
    }
    const double scale = std::max(std::abs(lo), std::abs(hi));

    GridEigenSystem sys{op.spec, {}, {}};
    for (int k = 0; k < count; ++k) {
        double a = lo - kEps * scale;
        double b = hi + kEps * scale;
        // Bisect down to adjacent doubles.
        for (int iter = 0; iter < 2100; ++iter) {
            const double mid = 0.5 * (a + b);
            if (!(mid > a && mid < b)) break;
            if (sturm_count(op, mid) > k) b = mid;
            else a = mid;
        }
        sys.eigenvalues.push_back(0.5 * (a + b));
    }

    if (with_eigenvectors) {
        std::mt19937_64 rng(20240601);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        for (int k = 0; k < count; ++k) {
            std::vector<double> v(static_cast<std::size_t>(n));
            for (double& x : v) x = dist(rng);
            const double shift = sys.eigenvalues[k] + 4.0 * kEps * scale;
            for (int iter = 0; iter < 4; ++iter) {
                solve_shifted(op, shift, v);
                for (const auto& prev : sys.eigenvectors) {
                    double dot = 0.0;
                    for (int i = 0; i < n; ++i) dot += prev[i] * v[i];
                    for (int i = 0; i < n; ++i) v[i] -= dot * prev[i];
                }
                normalize(v);
            }
            // Sign convention: largest-magnitude component positive.
            const auto big = std::max_element(v.begin(), v.end(),
                                              [](double x, double y) { return std::abs(x) < std::abs(y); });
            if (*big < 0.0) {
                for (double& x : v) x = -x;
            }
            sys.eigenvectors.push_back(std::move(v));
        }
    }
    return sys;
}

double reflection_overlap(std::span<const double> v) {
    double cross = 0.0;
    double norm = 0.0;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        cross += v[i] * v[n - 1 - i];
        norm += v[i] * v[i];
    }
    return cross / norm;
}

// ---------------------------------------------------------------- determinants

double gelfand_yaglom_ratio(const Potential& a, const Potential& b, double T, double rel_tol) {
    if (!(T > 0.0)) throw DomainError("gelfand_yaglom_ratio: T must be positive");
    const Shot sa = shoot(a, -T / 2.0, T / 2.0, 0.0, rel_tol);
    const Shot sb = shoot(b, -T / 2.0, T / 2.0, 0.0, rel_tol);
    const double ua = sa.state[0];
    const double ub = sb.state[0];
    if (ub == 0.0) throw NumericError("gelfand_yaglom_ratio: reference determinant vanishes", std::nan(""), 0.0);
    const double ratio = ua / ub * std::exp(sa.log_scale - sb.log_scale);
    if (!std::isfinite(ratio) || ratio == 0.0) {
        std::ostringstream msg;
        msg << "gelfand_yaglom_ratio: ratio exp(" << std::log(std::abs(ua / ub)) + sa.log_scale - sb.log_scale
            << ") is outside the double range";
        throw NumericError(msg.str(), ratio, 0.0);
    }
    return ratio;
}

BoxReducedRatio box_reduced_ratio(int ell, double L, int points) {
    const SusyLevel lv(ell);
    const GridSpec spec{L, points, 1.0};
    spec.validate();
    const auto o_potential = [&lv](double z) { return lv.potential(z); };
    const double l2 = static_cast<double>(ell * ell);
    const auto p_potential = [l2](double) { return l2; };

    const GridEigenSystem grid = lowest_eigenvalues(discretize(o_potential, spec), 2);
    BoxReducedRatio out;
    out.lambda0 = grid.eigenvalues[0];
    out.lambda1 = grid.eigenvalues[1];
    if (std::abs(out.lambda0) >= std::abs(out.lambda1) / 2.0) {
        std::ostringstream msg;
        msg << "box_reduced_ratio: lowest eigenvalue " << out.lambda0
            << " is not isolated from the next one " << out.lambda1;
        throw DiagnosticError(msg.str());
    }

    constexpr double kTol = 1e-13;
    const Shot so = shoot(o_potential, -L, L, 0.0, kTol);
    const Shot sp = shoot(p_potential, -L, L, 0.0, kTol);
    out.gy_ratio = so.state[0] / sp.state[0] * std::exp(so.log_scale - sp.log_scale);
    out.value = -so.state[2] / sp.state[0] * std::exp(so.log_scale - sp.log_scale);
    return out;
}

// ---------------------------------------------------------------- physical splitting

GridSpec default_splitting_grid(const DoubleWellParams& p) {
    const double root = std::sqrt(p.omega());
    const double L = 1.0 + 8.0 / root;
    const int points = static_cast<int>(std::ceil(100.0 * L * root));
    return {L, std::max(points, 16), 0.5};
}

PhysicalSplitting physical_splitting(const DoubleWellParams& p, const GridSpec& spec, double rel_tol,
                                     int max_doublings) {
    spec.validate();
    if (spec.kinetic_coefficient != 0.5) {
        throw DomainError("physical_splitting: the physical Hamiltonian needs kinetic_coefficient 1/2");
    }
    const double root = std::sqrt(p.omega());
    if (spec.half_width < 1.0 + 6.0 / root) {
        throw DomainError("physical_splitting: box does not contain the wells (need L >= 1 + 6/sqrt(omega))");
    }
    if (spec.points < 100.0 * spec.half_width * root) {
        throw DomainError("physical_splitting: grid too coarse (need N >= 100 L sqrt(omega))");
    }

    auto solve = [&](int points) {
        GridSpec g = spec;
        g.points = points;
        const auto sys = lowest_eigenvalues(
            discretize([&p](double x) { return potential(p, x); }, g), 2);
        const double split = sys.eigenvalues[1] - sys.eigenvalues[0];
        if (!(split > 1e3 * std::numeric_limits<double>::epsilon() * std::abs(sys.eigenvalues[1]))) {
            std::ostringstream msg;
            msg << "physical_splitting: splitting " << split << " is below the eigenvalue resolution at omega = "
                << p.omega();
            throw NumericError(msg.str(), split, std::abs(sys.eigenvalues[1]) * 1e3 *
                                                     std::numeric_limits<double>::epsilon());
        }
        return std::pair{sys.eigenvalues[0], sys.eigenvalues[1]};
    };

    int points = spec.points;
    auto coarse = solve(points);
    for (int doubling = 0;; ++doubling) {
        const auto fine = solve(2 * points);
        const double split_fine = fine.second - fine.first;
        const double split_coarse = coarse.second - coarse.first;
        const double shift = std::abs(split_fine - split_coarse) / std::abs(split_fine);
        if (shift < rel_tol) return {fine.first, fine.second, 2 * points, shift};
        if (doubling >= max_doublings) {
            std::ostringstream msg;
            msg << "physical_splitting: splitting moved by " << shift << " (relative) between N = "
                << points << " and N = " << 2 * points;
            throw AccuracyError(msg.str(), split_fine, shift);
        }
        points *= 2;
        coarse = fine;
    }
}

}  // namespace tunnel
