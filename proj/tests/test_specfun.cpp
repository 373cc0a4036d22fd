#include "tunnel/errors.hpp"
#include "tunnel/specfun.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hypergeometric_pFq.hpp>
#include <doctest.h>

#include <cmath>

using namespace tunnel;
using namespace tunnel::specfun;

TEST_CASE("gamma at simple points") {
    CHECK(specfun::gamma(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(specfun::gamma(0.5) == doctest::Approx(1.7724538509055160).epsilon(1e-13));
    CHECK(specfun::gamma(1.5) == doctest::Approx(0.8862269254527580).epsilon(1e-13));
}

TEST_CASE("gamma matches std::tgamma over a range") {
    for (double x = -4.75; x < 30.0; x += 0.37) {
        CHECK(specfun::gamma(x) == doctest::Approx(std::tgamma(x)).epsilon(1e-12));
    }
}

TEST_CASE("gamma poles") {
    CHECK_THROWS_AS(specfun::gamma(0.0), DomainError);
    CHECK_THROWS_AS(specfun::gamma(-3.0), DomainError);
    CHECK_THROWS_AS(specfun::digamma(-1.0), DomainError);
}

TEST_CASE("digamma values") {
    CHECK(specfun::digamma(1.0) == doctest::Approx(-kEulerGamma).epsilon(1e-12));
    CHECK(specfun::digamma(2.0) == doctest::Approx(1.0 - kEulerGamma).epsilon(1e-12));
    CHECK(specfun::digamma(0.5) == doctest::Approx(-kEulerGamma - 2.0 * std::log(2.0)).epsilon(1e-12));
    for (double x = -3.3; x < 25.0; x += 0.41) {
        CHECK(specfun::digamma(x) == doctest::Approx(boost::math::digamma(x)).epsilon(1e-11));
    }
}

TEST_CASE("gauss2f1") {
    CHECK(gauss2f1(1.0, 1.5, 2.0, 0.75) == doctest::Approx(8.0 / 3.0).epsilon(1e-11));
    CHECK(gauss2f1(0.3, 2.0, 1.7, 0.0) == 1.0);
    CHECK(gauss2f1(1.0, 1.0, 2.0, 0.5) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
    for (double s : {-0.3, 0.0, 0.5, 1.0, 2.5}) {
        const double ref = boost::math::hypergeometric_pFq({1.0, s + 1.5}, {s + 2.0}, 0.75);
        CHECK(gauss2f1(1.0, s + 1.5, s + 2.0, 0.75) == doctest::Approx(ref).epsilon(1e-11));
    }
}

TEST_CASE("gauss2f1 budget exhaustion carries the partial sum") {
    try {
        gauss2f1(1.0, 1.5, 2.0, 0.999, 1e-12, 20);
        FAIL("expected NumericError");
    } catch (const NumericError& e) {
        CHECK(e.estimate() > 1.0);
    }
}

TEST_CASE("parameter-derivative integrals") {
    const auto parts = f_param_derivative_parts();
    CHECK(parts.i1 == doctest::Approx(8.0 / 3.0).epsilon(1e-12));
    CHECK(std::abs(parts.i2 - 32.0 / 3.0 * std::log(2.0 / 3.0)) < 1e-9);
    CHECK(std::abs(parts.i3 - (-16.0 / 3.0 + 32.0 / 3.0 * std::log(2.0))) < 1e-9);
    CHECK(std::abs(parts.sum() - 0.40194210615232989) < 1e-9);
    CHECK(f_param_derivative_at_zero() == doctest::Approx(parts.sum()).epsilon(1e-14));
}

TEST_CASE("parameter derivative against a finite difference of the series") {
    const double h = 1e-4;
    const auto F = [](double s) { return gauss2f1(s + 1.5, 1.0, s + 2.0, 0.75, 1e-15); };
    const double fd = (F(h) - F(-h)) / (2.0 * h);
    CHECK(std::abs(fd - f_param_derivative_at_zero()) < 1e-6);
}

TEST_CASE("integrate") {
    CHECK(integrate([](double t) { return t; }, 0.0, 1.0).value == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(integrate([](double k) { return 1.0 / (k * k + 4.0); }, -kInf, kInf).value ==
          doctest::Approx(kPi / 2.0).epsilon(1e-11));
    CHECK(integrate([](double k) { return 1.0 / (k * k + 1.0); }, -kInf, kInf).value ==
          doctest::Approx(kPi).epsilon(1e-11));
    CHECK(integrate([](double x) { return std::exp(-x * x); }, -kInf, kInf).value ==
          doctest::Approx(std::sqrt(kPi)).epsilon(1e-11));
    const auto r = integrate([](double x) { return std::log(x); }, 0.0, 1.0);
    CHECK(r.value == doctest::Approx(-1.0).epsilon(1e-11));
    CHECK(r.error < 1e-10);
}

TEST_CASE("integrate failures") {
    QuadratureSpec tight;
    tight.max_subdivisions = 3;
    tight.abs_tol = 1e-15;
    tight.rel_tol = 1e-15;
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / x); }, 1e-4, 1.0, tight),
                    NumericError);
    CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0), NumericError);
    QuadratureSpec bad;
    bad.tail_exponent = 1.0;
    CHECK_THROWS(integrate([](double x) { return 1.0 / (1 + x * x); }, 0.0, kInf, bad));
}
