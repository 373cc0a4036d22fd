#pragma once

#include "tunnel/specfun.hpp"

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <utility>

namespace tunnel {

using Complex = std::complex<double>;

/// The reflectionless family O_l = -d^2/dz^2 - l(l+1) sech^2 z + l^2 with
/// superpotential W(z) = l tanh z.
class SusyLevel {
public:
    explicit SusyLevel(int ell);

    int ell() const { return ell_; }
    double superpotential(double z) const;
    double superpotential_derivative(double z) const;
    /// Potential of O_l, l^2 - l(l+1) sech^2 z.
    double potential(double z) const;

private:
    int ell_;
};

/// A function sum_{a,b} c_ab tanh^a(z) sech^b(z) e^{ikz}, held exactly.
///
/// Terms are kept canonical with a in {0, 1} (tanh^2 = 1 - sech^2 is applied
/// on insertion), which makes the representation unique. The plane-wave factor
/// is present only when a wavenumber is set.
class SusyState {
public:
    using Key = std::pair<int, int>;  // (tanh power, sech power)
    using Terms = std::map<Key, Complex>;

    SusyState() = default;
    SusyState(Terms terms, std::optional<double> wavenumber, double energy);

    static SusyState monomial(int tanh_power, int sech_power, Complex coefficient,
                              std::optional<double> wavenumber = std::nullopt, double energy = 0.0);

    const Terms& terms() const { return terms_; }
    std::optional<double> wavenumber() const { return wavenumber_; }
    double energy() const { return energy_; }
    Complex coefficient(int tanh_power, int sech_power) const;

    Complex operator()(double z) const;

    SusyState derivative() const;
    SusyState times_tanh() const;
    SusyState times_sech_squared() const;
    SusyState scaled(Complex factor) const;
    SusyState with_energy(double energy) const;

    /// Largest coefficient magnitude; zero for the zero function.
    double max_abs_coefficient() const;

    friend SusyState operator+(const SusyState& a, const SusyState& b);
    friend SusyState operator-(const SusyState& a, const SusyState& b);

private:
    void add(int tanh_power, int sech_power, Complex c);
    void prune();

    Terms terms_;
    std::optional<double> wavenumber_;
    double energy_ = 0.0;
};

/// (V-, V+) = (W^2 - W', W^2 + W') for W = l tanh z. V- is the potential of O_l.
std::pair<double, double> partner_potentials(const SusyLevel& lv, double z);

struct ShapeInvariance {
    double constant = 0.0;       // mean of V+(z, l) - V-(z, l-1)
    double max_deviation = 0.0;  // max |difference - mean|
};

/// V+(z, l) - V-(z, l - 1) over the samples; l = 1 is compared against the
/// free particle, V-(z, 0) = 0.
ShapeInvariance shape_invariance_residual(const SusyLevel& lv, std::span<const double> z_samples);

/// E_m = l^2 - (l - m)^2 for 0 <= m < l.
double bound_energy(const SusyLevel& lv, int m);

/// A+_l = -d/dz + l tanh z, applied exactly.
SusyState apply_ladder(const SusyLevel& lv, const SusyState& state);
/// A_l = d/dz + l tanh z.
SusyState apply_annihilator(const SusyLevel& lv, const SusyState& state);
/// O_l applied symbolically.
SusyState apply_hamiltonian(const SusyLevel& lv, const SusyState& state);
/// O_l phi - E phi, with E the state's stored energy.
SusyState eigen_residual(const SusyLevel& lv, const SusyState& state);

/// Normalized bound state phi_{l,m}: ladder operators A+_l ... A+_{l-m+1}
/// applied to the ground state of O_{l-m}.
SusyState bound_state(const SusyLevel& lv, int m);

/// Continuum state phi_{l,k} = prod_n A+_n / sqrt(k^2 + n^2) applied to
/// e^{ikz} / sqrt(2 pi); energy k^2 + l^2.
SusyState scattering_state(const SusyLevel& lv, double k);

/// Integral of conj(a) b over [-L, L] (adaptive quadrature).
Complex box_overlap(const SusyState& a, const SusyState& b, double half_width,
                    const specfun::QuadratureSpec& spec = {});

enum class DensityMethod { closed, integrated };

/// Continuum density of O_l minus that of the free comparison operator P_l.
class SpectralDensity {
public:
    explicit SpectralDensity(SusyLevel lv, DensityMethod method = DensityMethod::closed,
                             specfun::QuadratureSpec spec = {});

    int ell() const { return level_.ell(); }
    DensityMethod method() const { return method_; }

    /// closed: -(1/pi) sum_{n=1}^{l} n / (k^2 + n^2).
    /// integrated: int dz (|phi_{l,k}(z)|^2 - 1/(2 pi)).
    double operator()(double k) const;

private:
    SusyLevel level_;
    DensityMethod method_;
    specfun::QuadratureSpec spec_;
};

double spectral_density(const SusyLevel& lv, double k,
                        DensityMethod method = DensityMethod::closed);

}  // namespace tunnel
