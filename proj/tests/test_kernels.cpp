#include <cmath>

#include "doctest.h"
#include "stieltjes/kernels.hpp"
#include "stieltjes/quad.hpp"

using namespace stieltjes;
using kernels::PhiParams;
using kernels::PsiParams;

TEST_SUITE_BEGIN("kernels");

TEST_CASE("phi point values") {
    CHECK(kernels::phi({1.0, 2.0}, 0.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(kernels::phi({2.0, 5.0}, std::log(3.0)) ==
          doctest::Approx(9.0 / 1024.0).epsilon(1e-14));
    // no overflow far out; e^{-700} is still representable, e^{-800} is not
    CHECK(kernels::phi({1.0, 2.0}, 700.0) > 0.0);
    CHECK(std::isfinite(kernels::phi({1.0, 2.0}, 800.0)));
    CHECK(std::isfinite(kernels::phi({1.0, 2.0}, -800.0)));
}

TEST_CASE("phi sup norm") {
    CHECK(kernels::phi_sup_norm({0.0, 3.0}) == 1.0);
    CHECK(kernels::phi_sup_norm({2.0, 2.0}) == 1.0);
    CHECK(kernels::phi_sup_norm({1.0, 2.0}) == doctest::Approx(0.25).epsilon(1e-14));
    // the max sits where e^t = beta/(mu-beta); grid-scan cross-check
    const PhiParams p{1.0, 2.0};
    double grid_max = 0.0;
    for (double t = -30.0; t <= 30.0; t += 1e-3)
        grid_max = std::max(grid_max, kernels::phi(p, t));
    CHECK(kernels::phi_sup_norm(p) == doctest::Approx(grid_max).epsilon(1e-6));
    CHECK(kernels::phi(p, 0.0) == doctest::Approx(kernels::phi_sup_norm(p)));
    CHECK_THROWS_AS(kernels::phi_sup_norm({3.0, 2.0}), integrability_error);
}

TEST_CASE("phi Lp norms") {
    CHECK(kernels::phi_lp_norm({0.5, 1.0}, 2.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(kernels::phi_lp_norm({1.0, 2.0}, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(kernels::phi_lp_norm({1.0, 3.0}, 2.0) ==
          doctest::Approx(std::sqrt(1.0 / 20.0)).epsilon(1e-13));
    CHECK_THROWS_AS(kernels::phi_lp_norm({0.0, 1.0}, 2.0), integrability_error);
}

TEST_CASE("phi Fourier transform") {
    CHECK(kernels::phi_fourier({0.5, 1.0}, 0.0).real() ==
          doctest::Approx(M_PI).epsilon(1e-13));
    CHECK(kernels::phi_fourier({0.5, 1.0}, 1.0).real() ==
          doctest::Approx(M_PI / std::cosh(M_PI)).epsilon(1e-12));
    // oscillatory-quadrature oracle
    auto oracle = quad::fourier([](double t) { return kernels::phi({1.0, 3.0}, t); }, 0.7,
                                quad::WholeLine{});
    REQUIRE(oracle.converged);
    const auto closed = kernels::phi_fourier({1.0, 3.0}, 0.7);
    CHECK(std::abs(closed - oracle.value) <= 1e-7);
}

TEST_CASE("derivative polynomial tables") {
    const PhiParams p{1.5, 2.5};
    auto t0 = kernels::phi_derivative_poly(p, 0);
    REQUIRE(t0.coeffs.size() == 1);
    CHECK(t0.coeffs[0] == 1.0);
    auto t1 = kernels::phi_derivative_poly(p, 1);
    CHECK(t1.coeffs[0] == doctest::Approx(p.beta));
    CHECK(t1.coeffs[1] == doctest::Approx(-p.mu));
    auto t2 = kernels::phi_derivative_poly(p, 2);
    CHECK(t2.coeffs[0] == doctest::Approx(p.beta * p.beta));
    CHECK(t2.coeffs[1] == doctest::Approx(-p.mu * (2.0 * p.beta + 1.0)));
    CHECK(t2.coeffs[2] == doctest::Approx(p.mu * (p.mu + 1.0)));
}

TEST_CASE("table recursion is exact in rational arithmetic") {
    CHECK(kernels::phi_poly_recursion_exact(1, 1, 2, 1, 6));
    CHECK(kernels::phi_poly_recursion_exact(3, 2, 7, 2, 6));
    CHECK(kernels::phi_poly_recursion_exact(2, 3, 5, 1, 5));
}

TEST_CASE("reconstruction differentiates the previous order") {
    const PhiParams p{1.3, 2.9};
    const double h = 1e-5;
    for (int n = 1; n <= 4; ++n) {
        auto lo = kernels::phi_derivative_poly(p, n - 1);
        auto hi = kernels::phi_derivative_poly(p, n);
        for (double t : {-5.0, -1.0, 0.0, 2.0, 5.0}) {
            const double fd =
                (kernels::phi_derivative(p, lo, t - 2 * h) -
                 8 * kernels::phi_derivative(p, lo, t - h) +
                 8 * kernels::phi_derivative(p, lo, t + h) -
                 kernels::phi_derivative(p, lo, t + 2 * h)) /
                (12 * h);
            CHECK(std::abs(fd - kernels::phi_derivative(p, hi, t)) <= 1e-6);
        }
    }
}

TEST_CASE("psi point values") {
    CHECK(kernels::psi({1.0, 2.0}, 1.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
    CHECK(kernels::psi({2.0, 1.0}, std::log(2.0)) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(kernels::psi({3.0, 0.0}, 40.0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(kernels::psi({2.0, 1.0}, -1.0) == 0.0);
    CHECK(kernels::psi({2.0, 1.0}, 0.0) == 0.0);
}

TEST_CASE("psi norms") {
    CHECK(kernels::psi_sup_norm({1.0, 5.0}) == 1.0);
    CHECK(kernels::psi_sup_norm({2.0, 0.0}) == 2.0);
    CHECK(kernels::psi_sup_norm({2.0, 1.0}) == doctest::Approx(0.5).epsilon(1e-14));
    double grid_max = 0.0;
    for (double t = 0.0; t <= 40.0; t += 1e-3)
        grid_max = std::max(grid_max, kernels::psi({2.0, 1.0}, t));
    CHECK(kernels::psi_sup_norm({2.0, 1.0}) == doctest::Approx(grid_max).epsilon(1e-6));
    CHECK_THROWS_AS(kernels::psi_sup_norm({0.5, 1.0}), integrability_error);

    CHECK(kernels::psi_lp_norm({1.0, 1.0}, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(kernels::psi_lp_norm({2.0, 1.0}, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(kernels::psi_lp_norm({0.5, 1.0}, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_THROWS_AS(kernels::psi_lp_norm({0.5, 1.0}, 3.0), integrability_error);
}

TEST_CASE("psi Fourier transform") {
    CHECK(kernels::psi_fourier({1.0, 1.0}, 0.0).real() == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(kernels::psi_fourier({2.0, 1.0}, 0.0).real() == doctest::Approx(1.0).epsilon(1e-13));
    const auto v = kernels::psi_fourier({1.0, 1.0}, 1.0);
    CHECK(std::abs(v - std::complex<double>(0.5, -0.5)) <= 1e-13);  // 1/(1+i)
}

TEST_CASE("phi * phi closed form") {
    const double expect = std::exp(-0.5) / (1.0 - std::exp(-1.0));
    CHECK(kernels::phi_conv_phi({0.5, 1.0}, {0.5, 1.0}, 1.0) ==
          doctest::Approx(expect).epsilon(1e-12));
    CHECK(kernels::phi_conv_phi({0.5, 1.0}, {0.5, 1.0}, 0.0) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // direct convolution oracle
    auto oracle = quad::integrate(
        [](double tau) {
            return kernels::phi({1.0, 2.0}, tau) * kernels::phi({1.0, 2.0}, 0.5 - tau);
        },
        quad::WholeLine{});
    REQUIRE(oracle.converged);
    CHECK(std::abs(kernels::phi_conv_phi({1.0, 2.0}, {1.0, 2.0}, 0.5) - oracle.value) <= 1e-7);
    // reflection handles negative t, far t stays finite
    CHECK(kernels::phi_conv_phi({0.7, 1.3}, {0.4, 1.1}, -2.0) ==
          doctest::Approx(kernels::phi_conv_phi({0.6, 1.3}, {0.7, 1.1}, 2.0))
              .epsilon(1e-12));
    CHECK(std::isfinite(kernels::phi_conv_phi({0.5, 1.0}, {0.5, 1.0}, 50.0)));
}

TEST_CASE("phi * psi closed form") {
    CHECK(kernels::phi_conv_psi({1.0, 3.0}, {1.0, 1.0}, 0.0) ==
          doctest::Approx(0.125).epsilon(1e-12));
    CHECK(kernels::phi_conv_psi({0.5, 1.0}, {1.0, 0.5}, 1.0) ==
          doctest::Approx(std::exp(-0.5) * std::log(1.0 + std::exp(1.0))).epsilon(1e-12));
    auto oracle = quad::integrate(
        [](double tau) {
            return kernels::phi({0.5, 3.0}, -0.5 - tau) * kernels::psi({2.0, 1.0}, tau);
        },
        quad::HalfLine{});
    REQUIRE(oracle.converged);
    CHECK(std::abs(kernels::phi_conv_psi({0.5, 3.0}, {2.0, 1.0}, -0.5) - oracle.value) <=
          1e-7);
}

TEST_SUITE_END();
