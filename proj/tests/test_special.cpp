#include <cmath>
#include <complex>

#include "doctest.h"
#include "stieltjes/quad.hpp"
#include "stieltjes/special.hpp"

using namespace stieltjes;
using special::Complex;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

// direct series oracle, independent of the library evaluation paths
Complex series_oracle(Complex a, Complex b, Complex c, Complex z, int terms) {
    Complex term = 1.0, sum = 1.0;
    for (int k = 0; k < terms; ++k) {
        term *= (a + double(k)) * (b + double(k)) / ((c + double(k)) * double(k + 1)) * z;
        sum += term;
    }
    return sum;
}

}  // namespace

TEST_SUITE_BEGIN("special");

TEST_CASE("gamma classical values") {
    CHECK(special::gamma(Complex(1.0, 0.0)).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(special::gamma(Complex(0.5, 0.0)).real() ==
          doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(special::gamma(5.0) == doctest::Approx(24.0).epsilon(1e-14));
}

TEST_CASE("gamma against the defining integral") {
    // contour-safe form: int e^{z u - e^u} du over the whole line
    const Complex z(0.5, 3.0);
    quad::Config tight;
    tight.abs_tol = 1e-13;
    tight.rel_tol = 1e-12;
    auto oracle = quad::integrate(
        [&](double u) { return std::exp(z * u - std::exp(u)); }, quad::WholeLine{}, tight);
    REQUIRE(oracle.converged);
    CHECK(rel(special::gamma(z), oracle.value) <= 1e-12);
}

TEST_CASE("recurrence across the strip") {
    const Complex zs[] = {{0.3, 0.0},  {1.7, -2.4},   {-2.3, 4.0},
                          {0.5, 50.0}, {-0.5, 120.0}, {3.2, 199.0}};
    for (const auto& z : zs) {
        CHECK(rel(special::gamma(z + 1.0), z * special::gamma(z)) <= 1e-12);
    }
}

TEST_CASE("reflection") {
    const Complex zs[] = {{0.3, 0.0}, {0.5, 2.0}, {-1.2, 0.7}, {0.25, 30.0}, {2.8, -14.0}};
    for (const auto& z : zs) {
        const Complex lhs = special::gamma(z) * special::gamma(1.0 - z);
        CHECK(rel(lhs, M_PI / std::sin(M_PI * z)) <= 1e-11);
    }
}

TEST_CASE("poles fail loudly") {
    CHECK_THROWS_AS(special::gamma(Complex(0.0, 0.0)), pole_error);
    CHECK_THROWS_AS(special::gamma(Complex(-3.0, 0.0)), pole_error);
    CHECK_THROWS_AS(special::beta(Complex(1.0, 0.0), Complex(-2.0, 0.0)), pole_error);
    CHECK_THROWS_AS(special::digamma(-1.0), pole_error);
}

TEST_CASE("beta values") {
    CHECK(special::beta(0.5, 0.5) == doctest::Approx(M_PI).epsilon(1e-13));
    CHECK(special::beta(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    const Complex b = special::beta(Complex(0.5, 1.0), Complex(0.5, -1.0));
    CHECK(b.real() == doctest::Approx(M_PI / std::cosh(M_PI)).epsilon(1e-12));
    CHECK(std::abs(b.imag()) <= 1e-15);
}

TEST_CASE("beta stays finite far up the vertical line") {
    // plain Gamma would overflow/underflow here; the log route must not
    const Complex b = special::beta(Complex(1.0, 150.0), Complex(1.0, -150.0));
    CHECK(std::isfinite(b.real()));
    CHECK(std::abs(b) > 0.0);
    CHECK(std::abs(b) < 1e-100);  // fast decay along the line
}

TEST_CASE("digamma") {
    CHECK(special::digamma(1.0) == doctest::Approx(-0.5772156649015329).epsilon(1e-13));
    CHECK(special::digamma(0.5) ==
          doctest::Approx(-0.5772156649015329 - 2.0 * std::log(2.0)).epsilon(1e-13));
    // recurrence psi(x+1) = psi(x) + 1/x
    CHECK(special::digamma(3.7) ==
          doctest::Approx(special::digamma(2.7) + 1.0 / 2.7).epsilon(1e-13));
}

TEST_CASE("2f1 elementary cases") {
    CHECK(special::hyp2f1(3.0, 2.0, 3.0, 0.3) ==
          doctest::Approx(std::pow(0.7, -2.0)).epsilon(1e-13));
    CHECK(special::hyp2f1(Complex(0.7, 0.1), Complex(2.0, 0.0), Complex(1.4, 0.0),
                          Complex(0.0, 0.0)) == Complex(1.0, 0.0));
    const double v = special::hyp2f1(0.5, 0.5, 1.5, 0.25);
    CHECK(v == doctest::Approx(series_oracle(0.5, 0.5, 1.5, 0.25, 60).real())
                   .epsilon(1e-13));
    CHECK(v == doctest::Approx(M_PI / 3.0).epsilon(1e-13));  // asin(1/2)/(1/2)
}

TEST_CASE("2f1 near the cut") {
    // integer c-a-b goes through the log expansion
    CHECK(special::hyp2f1(1.0, 1.0, 2.0, 0.99) ==
          doctest::Approx(-std::log(0.01) / 0.99).epsilon(1e-12));
    // non-integer c-a-b through the two-series form
    CHECK(special::hyp2f1(0.5, 0.5, 1.5, 0.97) ==
          doctest::Approx(std::asin(std::sqrt(0.97)) / std::sqrt(0.97)).epsilon(1e-12));
    // exact complements straight through the connection formulas
    CHECK(special::hyp2f1_one_minus(1.0, 1.0, 2.0, 1e-8) ==
          doctest::Approx(-std::log(1e-8) / (1.0 - 1e-8)).epsilon(1e-10));
    CHECK(special::hyp2f1_one_minus(0.7, 1.3, 2.9, 0.4) ==
          doctest::Approx(special::hyp2f1(0.7, 1.3, 2.9, 0.6)).epsilon(1e-12));
    CHECK_THROWS_AS(special::hyp2f1(1.0, 1.0, 2.0, 1.2), cut_error);
    CHECK_THROWS_AS(special::hyp2f1(Complex(1, 0), Complex(1, 0), Complex(2, 0),
                                    Complex(1.0, 0.0)),
                    cut_error);
}

TEST_CASE("2f1 far negative argument") {
    CHECK(special::hyp2f1(1.0, 1.0, 2.0, -9.0) ==
          doctest::Approx(std::log(10.0) / 9.0).epsilon(1e-12));
    CHECK(special::hyp2f1(1.0, 1.0, 2.0, -1e6) ==
          doctest::Approx(std::log(1e6 + 1.0) / 1e6).epsilon(1e-11));
}

TEST_CASE("2f1 complex argument via Euler fallback") {
    const Complex a(0.8, 0.3), b(1.2, 0.0), c(2.6, 0.0);
    const Complex z(0.8, 0.8);  // both |z| and |z/(z-1)| exceed 1
    quad::Config cfg;
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-12;
    auto oracle = quad::integrate(
        [&](double s) -> Complex {
            return std::pow(s, b.real() - 1.0) * std::pow(1.0 - s, (c - b).real() - 1.0) *
                   std::exp(-a * std::log(1.0 - z * s));
        },
        quad::Interval{0.0, 1.0}, cfg);
    const Complex expect =
        std::exp(special::log_gamma(c) - special::log_gamma(b) - special::log_gamma(c - b)) *
        oracle.value;
    CHECK(rel(special::hyp2f1(a, b, c, z), expect) <= 1e-8);
}

TEST_CASE("kummer identity on the sample grid") {
    const Complex a(0.8, 0.0), b(1.7, 0.0), c(3.1, 0.0);
    for (int k = 0; k < 10; ++k) {
        const Complex z(-0.8 + k * 1.25 / 9.0, 0.0);
        const Complex lhs = special::hyp2f1_series(a, b, c, z);
        const Complex rhs =
            std::pow(1.0 - z.real(), -a.real()) *
            special::hyp2f1_series(a, c - b, c, z / (z - 1.0));
        CHECK(rel(lhs, rhs) <= 1e-9);
    }
}

TEST_CASE("gamma ratio asymptotic") {
    CHECK(special::gamma_ratio_asymptotic(Complex(100.0, 0.0), Complex(1.0, 0.0)).real() ==
          doctest::Approx(100.0).epsilon(1e-14));
    const double approx =
        special::gamma_ratio_asymptotic(Complex(50.0, 0.0), Complex(0.5, 0.0)).real();
    const double exact =
        (special::gamma(Complex(50.5, 0.0)) / special::gamma(Complex(50.0, 0.0))).real();
    CHECK(std::abs(approx - exact) / exact <= 0.01);
    const Complex z(10.0, 10.0);
    const Complex approx2 = special::gamma_ratio_asymptotic(z, Complex(2.0, 0.0));
    const Complex exact2 = z * (z + 1.0);
    CHECK(std::abs(approx2 - exact2) / std::abs(exact2) <= 2.0 / std::abs(z));
    CHECK_THROWS_AS(special::gamma_ratio_asymptotic(Complex(-1.0, 0.0), Complex(1.0, 0.0)),
                    std::domain_error);
}

TEST_SUITE_END();
