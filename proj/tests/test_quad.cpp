#include <cmath>
#include <random>

#include "doctest.h"
#include "stieltjes/kernels.hpp"
#include "stieltjes/quad.hpp"

using namespace stieltjes;

TEST_SUITE_BEGIN("quad");

TEST_CASE("half-line basics") {
    auto r = quad::integrate([](double t) { return std::exp(-t); }, quad::HalfLine{});
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));

    // integrable endpoint singularity
    auto s = quad::integrate([](double t) { return t <= 0 ? 0.0 : std::exp(-t) / std::sqrt(t); },
                             quad::HalfLine{});
    CHECK(s.converged);
    CHECK(s.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-11));
}

TEST_CASE("whole-line kernel mass") {
    auto r = quad::integrate([](double t) { return kernels::phi({1.0, 2.0}, t); },
                             quad::WholeLine{});
    CHECK(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("known antiderivatives on random intervals") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> unif(-5.0, 5.0);
    for (int k = 0; k < 100; ++k) {
        double a = unif(rng), b = unif(rng);
        if (a > b) std::swap(a, b);
        auto r = quad::integrate([](double x) { return std::cos(x) + x * x * x; },
                                 quad::Interval{a, b});
        const double exact =
            std::sin(b) - std::sin(a) + (b * b * b * b - a * a * a * a) / 4.0;
        CHECK(r.converged);
        CHECK(std::abs(r.value - exact) <= 1e-8 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("linearity within combined error") {
    auto f = [](double x) { return std::exp(-x * x); };
    auto g = [](double x) { return 1.0 / (1.0 + x * x); };
    auto rf = quad::integrate(f, quad::WholeLine{});
    auto rg = quad::integrate(g, quad::WholeLine{});
    auto rc = quad::integrate([&](double x) { return 2.0 * f(x) - 3.0 * g(x); },
                              quad::WholeLine{});
    CHECK(std::abs(rc.value - (2.0 * rf.value - 3.0 * rg.value)) <=
          2.0 * rf.err_estimate + 3.0 * rg.err_estimate + rc.err_estimate + 1e-12);
}

TEST_CASE("power-weighted endpoints are exact") {
    // \int_0^1 s^{-1/2} ds = 2, \int_0^2 (2-s)^{1/3} ds = 3/4 * 2^{4/3}
    auto l = quad::integrate_power_left([](double) { return 1.0; }, 0.0, 1.0, -0.5);
    CHECK(l.value == doctest::Approx(2.0).epsilon(1e-13));
    auto r = quad::integrate_power_right([](double) { return 1.0; }, 0.0, 2.0, 1.0 / 3.0);
    CHECK(r.value == doctest::Approx(0.75 * std::pow(2.0, 4.0 / 3.0)).epsilon(1e-13));
    auto h = quad::integrate_power_halfline([](double u) { return std::exp(-u); }, -0.5);
    CHECK(h.value == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-11));
}

TEST_CASE("principal value: odd kernel vanishes") {
    auto r = quad::principal_value([](double) { return 1.0; }, 1.0, quad::Interval{0.0, 2.0});
    CHECK(r.converged);
    CHECK(std::abs(r.value) <= 1e-9);
}

TEST_CASE("principal value: half-line closed form") {
    // p.v. int_0^inf (1+s)^-2 / (1-s) ds = 1/2 by partial fractions;
    // the epsilon extrapolation certifies ~1e-7 relative, not the engine
    // default, so the convergence check runs at that scale
    quad::Config cfg;
    cfg.rel_tol = 1e-7;
    auto r = quad::principal_value([](double s) { return std::pow(1.0 + s, -2.0); }, 1.0,
                                   quad::HalfLine{}, cfg);
    CHECK(r.converged);
    CHECK(r.err_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(r.value)));
    CHECK(r.value == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("principal value: Hilbert pair table") {
    // p.v. int f(s)/(t-s) ds = pi t/(1+t^2) for f = 1/(1+s^2)
    quad::Config cfg;
    cfg.rel_tol = 1e-7;
    for (int k = 0; k < 20; ++k) {
        const double t = -4.75 + 0.5 * k;
        auto r = quad::principal_value([](double s) { return 1.0 / (1.0 + s * s); }, t,
                                       quad::WholeLine{}, cfg);
        CHECK((r.converged || std::abs(r.value) < 0.3));  // near t=0 the value cancels
        CHECK(std::abs(r.value - M_PI * t / (1.0 + t * t)) <= 1e-6);
    }
}

TEST_CASE("principal value agrees with a dense-epsilon run") {
    quad::Config dense;
    dense.pv_epsilons = {1e-3, 1e-4, 1e-5, 1e-6, 1e-7};
    auto a = quad::principal_value([](double s) { return std::exp(-s); }, 1.0,
                                   quad::HalfLine{});
    auto b = quad::principal_value([](double s) { return std::exp(-s); }, 1.0,
                                   quad::HalfLine{}, dense);
    CHECK(std::abs(a.value - b.value) <= 1e-8);
}

TEST_CASE("fourier transforms") {
    auto box = quad::fourier([](double) { return 1.0; }, M_PI, quad::Interval{-1.0, 1.0});
    CHECK(std::abs(box.value) <= 1e-12);

    auto gauss = quad::fourier([](double x) { return std::exp(-x * x); }, 1.0,
                               quad::WholeLine{});
    CHECK(gauss.converged);
    CHECK(gauss.value.real() ==
          doctest::Approx(std::sqrt(M_PI) * std::exp(-0.25)).epsilon(1e-11));
    CHECK(std::abs(gauss.value.imag()) <= 1e-11);

    auto phi0 = quad::fourier([](double t) { return kernels::phi({0.5, 1.0}, t); }, 0.0,
                              quad::WholeLine{});
    CHECK(phi0.value.real() == doctest::Approx(M_PI).epsilon(1e-9));

    // slow 1/x tail, checked against the half-period-accelerated reference
    auto slow =
        quad::fourier([](double x) { return 1.0 / (1.0 + x); }, 1.0, quad::HalfLine{});
    CHECK(slow.converged);
    CHECK(slow.value.real() == doctest::Approx(0.3433779615564283).epsilon(1e-9));
    CHECK(slow.value.imag() == doctest::Approx(-0.6214496242358134).epsilon(1e-9));
}

TEST_CASE("non-convergence is flagged, never silent") {
    quad::Config tiny;
    tiny.max_evals = 200;
    auto r = quad::integrate([](double t) { return std::exp(-t) / std::sqrt(std::abs(t)); },
                             quad::HalfLine{}, tiny);
    CHECK_FALSE(r.converged);
    CHECK_THROWS_AS(quad::require_converged(r, "test"), convergence_error);
}

TEST_CASE("config validation") {
    quad::Config bad;
    bad.abs_tol = -1.0;
    CHECK_THROWS_AS(quad::integrate([](double) { return 0.0; }, quad::Interval{0.0, 1.0}, bad),
                    std::invalid_argument);
    quad::Config bad2;
    bad2.pv_epsilons = {1e-4, 1e-3};  // not decreasing
    CHECK_THROWS_AS(quad::principal_value([](double) { return 1.0; }, 1.0,
                                          quad::Interval{0.0, 2.0}, bad2),
                    std::invalid_argument);
    quad::Config bad3;
    bad3.max_evals = 10;
    CHECK_THROWS_AS(quad::integrate([](double) { return 0.0; }, quad::Interval{0.0, 1.0}, bad3),
                    std::invalid_argument);
}

TEST_SUITE_END();
