#include "tunnel/errors.hpp"
#include "tunnel/susyqm.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace tunnel;
using specfun::kPi;

namespace {

std::vector<double> grid(double lo, double hi, int n) {
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = lo + (hi - lo) * i / (n - 1);
    return out;
}

double sech(double z) { return 1.0 / std::cosh(z); }

// Independent closed form for the l = 2 continuum state.
Complex phi2_closed(double k, double z) {
    const Complex num(-k * k + 2.0 - 3.0 * sech(z) * sech(z), -3.0 * k * std::tanh(z));
    return num * std::exp(Complex(0.0, k * z)) /
           (std::sqrt(2.0 * kPi) * std::sqrt(k * k + 4.0) * std::sqrt(k * k + 1.0));
}

}  // namespace

TEST_CASE("level") {
    CHECK_THROWS_AS(SusyLevel(0), DomainError);
    const SusyLevel lv(2);
    CHECK(lv.potential(0.0) == doctest::Approx(-2.0));
    CHECK(lv.potential(50.0) == doctest::Approx(4.0));
}

TEST_CASE("partner potentials") {
    const auto [vm, vp] = partner_potentials(SusyLevel(1), 0.0);
    CHECK(vm == doctest::Approx(-1.0));
    CHECK(vp == doctest::Approx(1.0));
    for (double z : {-2.0, 0.4, 3.0}) {
        const SusyLevel lv(3);
        CHECK(partner_potentials(lv, z).first == doctest::Approx(lv.potential(z)).epsilon(1e-13));
    }
}

TEST_CASE("shape invariance") {
    const auto zs = grid(-6.0, 6.0, 100);
    const auto s2 = shape_invariance_residual(SusyLevel(2), zs);
    CHECK(s2.constant == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(s2.max_deviation <= 1e-12);
    CHECK(shape_invariance_residual(SusyLevel(3), zs).constant == doctest::Approx(5.0));
    const auto s1 = shape_invariance_residual(SusyLevel(1), zs);
    CHECK(s1.constant == doctest::Approx(1.0));
    CHECK(s1.max_deviation <= 1e-12);
}

TEST_CASE("bound energies") {
    CHECK(bound_energy(SusyLevel(2), 0) == 0.0);
    CHECK(bound_energy(SusyLevel(2), 1) == 3.0);
    CHECK(bound_energy(SusyLevel(3), 2) == 8.0);
    CHECK_THROWS_AS(bound_energy(SusyLevel(2), 2), DomainError);
    CHECK_THROWS_AS(bound_energy(SusyLevel(2), -1), DomainError);
}

TEST_CASE("ladder operator") {
    const SusyLevel l1(1);
    const auto plane = SusyState::monomial(0, 0, 1.0 / std::sqrt(2.0 * kPi), 0.7);
    const auto up = apply_ladder(l1, plane);
    for (double z : {-1.3, 0.0, 2.2}) {
        const Complex want = Complex(std::tanh(z), -0.7) * std::exp(Complex(0.0, 0.7 * z)) /
                             std::sqrt(2.0 * kPi);
        CHECK(std::abs(up(z) - want) < 1e-14);
    }
    const auto s = apply_ladder(l1, SusyState::monomial(0, 1, 1.0));
    CHECK(s.coefficient(1, 1) == Complex(2.0, 0.0));
    CHECK(s.terms().size() == 1);
}

TEST_CASE("ground states") {
    CHECK(bound_state(SusyLevel(1), 0)(0.0).real() == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(bound_state(SusyLevel(2), 0)(0.0).real() == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("bound states are eigenstates and orthonormal") {
    for (int ell = 1; ell <= 5; ++ell) {
        const SusyLevel lv(ell);
        std::vector<SusyState> states;
        for (int m = 0; m < ell; ++m) {
            states.push_back(bound_state(lv, m));
            CHECK(states.back().energy() == bound_energy(lv, m));
            CHECK(eigen_residual(lv, states.back()).max_abs_coefficient() < 1e-10);
        }
        for (int a = 0; a < ell; ++a) {
            for (int b = a; b < ell; ++b) {
                const Complex ov = box_overlap(states[a], states[b], 40.0);
                CHECK(std::abs(ov - Complex(a == b ? 1.0 : 0.0, 0.0)) < 1e-8);
            }
        }
    }
    CHECK(std::abs(box_overlap(bound_state(SusyLevel(3), 1), bound_state(SusyLevel(3), 1), 40.0) -
                   1.0) < 1e-8);
}

TEST_CASE("continuum states") {
    const SusyLevel l2(2);
    const auto phi = scattering_state(l2, 1.0);
    CHECK(std::abs(phi(0.0) - Complex(-0.25231325220201600, 0.0)) < 1e-13);
    for (double k : {0.5, 1.0, 3.0}) {
        const auto s = scattering_state(l2, k);
        for (double z : grid(-5.0, 5.0, 41)) CHECK(std::abs(s(z) - phi2_closed(k, z)) < 1e-12);
    }
    const auto s1 = scattering_state(SusyLevel(1), 0.5);
    CHECK(s1.energy() == doctest::Approx(1.25));
    CHECK(eigen_residual(SusyLevel(1), s1).max_abs_coefficient() < 1e-10);
    for (int ell = 1; ell <= 4; ++ell) {
        CHECK(eigen_residual(SusyLevel(ell), scattering_state(SusyLevel(ell), 1.7))
                  .max_abs_coefficient() < 1e-10);
    }
}

TEST_CASE("continuum states orthogonal to bound states") {
    const SusyLevel l3(3);
    const auto phi = scattering_state(l3, 0.8);
    for (int m = 0; m < 3; ++m) {
        const Complex ov = box_overlap(bound_state(l3, m), phi, 40.0);
        CHECK(std::abs(ov) < 1e-9);
    }
}

TEST_CASE("symbolic algebra") {
    const auto t2 = SusyState::monomial(0, 0, 1.0).times_tanh().times_tanh();
    CHECK(t2.coefficient(0, 0) == Complex(1.0));
    CHECK(t2.coefficient(0, 2) == Complex(-1.0));
    const auto d = SusyState::monomial(1, 2, 1.0).derivative();
    const double h = 1e-5;
    for (double z : {-0.9, 0.2, 1.5}) {
        const auto f = [](double x) { return std::tanh(x) * std::pow(sech(x), 2); };
        CHECK(d(z).real() == doctest::Approx((f(z + h) - f(z - h)) / (2 * h)).epsilon(1e-8));
    }
    const auto zero = SusyState::monomial(0, 1, 2.0) - SusyState::monomial(0, 1, 2.0);
    CHECK(zero.max_abs_coefficient() == 0.0);
}

TEST_CASE("spectral density") {
    const SusyLevel l2(2);
    CHECK(spectral_density(l2, 0.0) == doctest::Approx(-3.0 / (2.0 * kPi)).epsilon(1e-14));
    CHECK(spectral_density(l2, 1.0) == doctest::Approx(-9.0 / (10.0 * kPi)).epsilon(1e-14));
    for (int ell = 1; ell <= 3; ++ell) {
        const SpectralDensity rho{SusyLevel(ell)};
        const auto r = specfun::integrate([&](double k) { return rho(k); }, -specfun::kInf,
                                          specfun::kInf);
        CHECK(std::abs(r.value + ell) < 1e-8);
    }
    const SpectralDensity closed{l2, DensityMethod::closed};
    const SpectralDensity integrated{l2, DensityMethod::integrated};
    for (double k : {0.3, 1.0, 2.5, 6.0}) CHECK(std::abs(closed(k) - integrated(k)) < 1e-6);
}
