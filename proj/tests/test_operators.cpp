#include <cmath>

#include "doctest.h"
#include "stieltjes/operators.hpp"
#include "stieltjes/quad.hpp"
#include "stieltjes/special.hpp"

using namespace stieltjes;
using namespace stieltjes::ops;

namespace {

// Dawson integral by Maclaurin series; independent of the transform code
double dawson(double t) {
    double term = t, sum = t;
    for (int n = 1; n < 60; ++n) {
        term *= -2.0 * t * t / (2.0 * n + 1.0);
        sum += term;
    }
    return sum;
}

}  // namespace

TEST_SUITE_BEGIN("operators");

TEST_CASE("boundedness predicate") {
    CHECK(StieltjesParams{1.0, 1.0, 2.0}.is_bounded());
    CHECK_FALSE(StieltjesParams{0.4, 1.0, 2.0}.is_bounded());
    CHECK_FALSE(StieltjesParams{3.0, 1.0, 2.0}.is_bounded());
    CHECK_THROWS_AS(stieltjes_norm({0.4, 1.0, 2.0}), unbounded_operator_error);
}

TEST_CASE("classical transform values") {
    auto f = catalog::recip1p(1.0);
    auto h2 = catalog::h2();
    for (double t : {0.5, 2.0, 5.0}) {
        CHECK(stieltjes_apply({1.0, 1.0, 2.0}, f, t) ==
              doctest::Approx(std::log(t) / (t - 1.0)).epsilon(1e-10));
        CHECK(stieltjes_apply({1.0, 1.0, 2.0}, h2, t) ==
              doctest::Approx((t - std::log(t) - 1.0) / ((t - 1.0) * (t - 1.0)))
                  .epsilon(1e-10));
    }
    // constants are near-eigenfunctions of S_{1,2}
    auto plat = catalog::plateau();
    for (double t : {0.5, 1.0, 5.0})
        CHECK(std::abs(stieltjes_apply({1.0, 2.0, 2.0}, plat, t) - 1.0) <= 1e-3);
}

TEST_CASE("subordinated route agrees") {
    auto f = catalog::recip1p(1.0);
    CHECK(std::abs(stieltjes_subordinated({1.0, 1.0, 2.0}, f, 2.0) - std::log(2.0)) <= 1e-7);
    auto e1 = catalog::exp_decay(1.0);
    CHECK(std::abs(stieltjes_subordinated({1.0, 2.0, 2.0}, e1, 1.0) -
                   stieltjes_apply({1.0, 2.0, 2.0}, e1, 1.0)) <= 1e-7);
    auto plat = catalog::plateau();
    for (double t : {0.5, 1.0, 5.0})
        CHECK(std::abs(stieltjes_subordinated({1.0, 2.0, 2.0}, plat, t) - 1.0) <= 1e-3);
}

TEST_CASE("operator norms") {
    CHECK(stieltjes_norm({1.0, 1.0, 2.0}) == doctest::Approx(M_PI).epsilon(1e-13));
    CHECK(stieltjes_norm({1.0, 2.0, 2.0}) == doctest::Approx(M_PI / 2.0).epsilon(1e-13));
    CHECK(stieltjes_norm({1.0, 1.0, 4.0}) ==
          doctest::Approx(M_PI / std::sin(M_PI / 4.0)).epsilon(1e-13));
    CHECK(cesaro_norm({1.0, 2.0}) == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(cesaro_norm({1.0, 3.0}) == doctest::Approx(1.5).epsilon(1e-13));
    CHECK(cesaro_norm({2.0, 2.0}) == doctest::Approx(8.0 / 3.0).epsilon(1e-13));
    CHECK(hilbert_norm(2.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_THROWS_AS(cesaro_norm({1.0, 1.0}), unbounded_operator_error);
}

TEST_CASE("adjoint parameters") {
    auto a = adjoint_params({1.0, 2.0, 2.0});
    CHECK(a.beta == doctest::Approx(2.0));
    CHECK(a.mu == doctest::Approx(2.0));
    CHECK(a.p == doctest::Approx(2.0));
    // self-adjoint family beta, 2 beta - 1
    auto sa = adjoint_params({1.5, 2.0, 2.0});
    CHECK(sa.beta == doctest::Approx(1.5));
    CHECK(sa.mu == doctest::Approx(2.0));
    // involution
    auto twice = adjoint_params(adjoint_params({1.3, 2.7, 2.0}));
    CHECK(twice.beta == doctest::Approx(1.3));
    CHECK(twice.mu == doctest::Approx(2.7));
    CHECK(twice.p == doctest::Approx(2.0));
    CHECK_THROWS_AS(adjoint_params({1.0, 2.0, 1.0}), std::domain_error);
}

TEST_CASE("cesaro averaging") {
    auto plat = catalog::plateau();
    CHECK(cesaro_apply({1.0, 2.0}, plat, 3.0) == doctest::Approx(1.0).epsilon(1e-3));
    TestFunction lin;
    lin.id = "s";
    lin.eval = [](double s) { return s; };
    lin.decay = DecayClass::compact_support;  // only used on (0, t]
    lin.support_radius = 1e30;
    CHECK(cesaro_apply({1.0, 2.0}, lin, 2.0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(cesaro_apply({2.0, 2.0}, catalog::exp_decay(1.0), 1.0) ==
          doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-10));
    CHECK_THROWS_AS(cesaro_apply({-1.0, 2.0}, plat, 1.0), integrability_error);
}

TEST_CASE("half-line Hilbert transform") {
    auto h2 = catalog::h2();
    auto v = hilbert_plus(h2, 1.0);
    CHECK(v.real() == 0.0);
    CHECK(v.imag() == doctest::Approx(0.5 / M_PI).epsilon(1e-8));

    // symmetric bump about t: the near-field cancels, only the tail is left
    TestFunction bump;
    bump.id = "gauss@2";
    bump.eval = [](double s) { return std::exp(-(s - 2.0) * (s - 2.0)); };
    bump.decay = DecayClass::schwartz;
    auto w = hilbert_plus(bump, 2.0);
    auto tail = quad::integrate([&](double u) { return std::exp(-u * u) / u; },
                                quad::HalfLine{2.0});
    CHECK(w.imag() == doctest::Approx(-tail.value / M_PI).epsilon(1e-8));

    // stability across excision refinements
    quad::Config dense;
    dense.pv_epsilons = {1e-3, 1e-4, 1e-5, 1e-6, 1e-7};
    auto e1 = catalog::exp_decay(1.0);
    CHECK(std::abs(hilbert_plus(e1, 1.0).imag() - hilbert_plus(e1, 1.0, dense).imag()) <=
          1e-6);
    CHECK_THROWS_AS(hilbert_plus(h2, -1.0), std::domain_error);
}

TEST_CASE("whole-line Hilbert transform") {
    TestFunction poisson;
    poisson.id = "poisson";
    poisson.domain = FnDomain::whole_line;
    poisson.decay = DecayClass::rational_decay;
    poisson.decay_exponent = 2.0;
    poisson.eval = [](double s) { return 1.0 / (1.0 + s * s); };
    auto v = hilbert_line(poisson, 1.0);
    CHECK(std::abs(v - std::complex<double>(0.0, 0.5)) <= 1e-8);

    auto g = catalog::gauss();
    CHECK(std::abs(hilbert_line(g, 0.0)) <= 1e-9);  // even input vanishes at 0
    CHECK(hilbert_line(g, 1.0).imag() ==
          doctest::Approx(2.0 * dawson(1.0) / std::sqrt(M_PI)).epsilon(1e-8));

    TestFunction odd;
    odd.id = "t*gauss";
    odd.domain = FnDomain::whole_line;
    odd.decay = DecayClass::schwartz;
    odd.eval = [](double t) { return t * std::exp(-t * t); };
    CHECK(std::abs(hilbert_line(odd, 0.0).imag()) > 0.1);  // odd input does not vanish
}

TEST_CASE("composition kernel vs nested application") {
    auto e1 = catalog::exp_decay(1.0);
    const StieltjesParams sp{1.0, 2.0, 2.0};
    TestFunction sf;
    sf.id = "S(e1)";
    sf.decay = DecayClass::rational_decay;
    sf.decay_exponent = 1.0;
    sf.eval = [&](double s) { return stieltjes_apply(sp, e1, s); };
    for (double t : {0.5, 1.0, 2.0}) {
        CHECK(std::abs(compose_stieltjes(sp, sp, e1, t) - stieltjes_apply(sp, sf, t)) <=
              1e-5);
    }
    // prefactor B(beta+nu-gamma, gamma+mu-beta) at beta=gamma=1, mu=nu=2
    CHECK(special::beta(2.0, 2.0) == doctest::Approx(1.0 / 6.0).epsilon(1e-13));
    // double eigen-action on the t^{-1/2} power bump
    auto b = catalog::bump(0.5, 1e10, 1e-10);
    CHECK(std::abs(compose_stieltjes({1.0, 1.0, 2.0}, {1.0, 1.0, 2.0}, b, 1.0) -
                   M_PI * M_PI) <= 2e-3 * M_PI * M_PI);
    CHECK_THROWS_AS(compose_stieltjes({1.0, 2.0, 2.0}, {1.0, 2.0, 4.0}, e1, 1.0),
                    std::invalid_argument);
}

TEST_CASE("cesaro composition closed kernel") {
    auto e1 = catalog::exp_decay(1.0);
    // S_{1,1} C_1 f(t) = (1/t) int log(1 + t/s) f(s) ds
    auto log_oracle = quad::integrate(
        [](double s) { return std::log1p(1.0 / s) * std::exp(-s); }, quad::HalfLine{});
    CHECK(std::abs(cesaro_stieltjes_compose({1.0, 1.0, 2.0}, {1.0, 2.0}, e1, 1.0) -
                   log_oracle.value) <= 1e-8);
    // factorization at beta = gamma + 1
    CHECK(std::abs(cesaro_stieltjes_compose({2.0, 3.0, 2.0}, {1.0, 2.0}, e1, 1.0) -
                   special::beta(1.0, 2.0) * stieltjes_apply({1.0, 2.0, 2.0}, e1, 1.0)) <=
          1e-6);
    // beta != 1 closed kernel of the order-one average
    auto plat = catalog::plateau();
    auto kern_oracle = quad::integrate(
        [&](double s) {
            return (1.0 - s / (1.0 + s)) * plat.eval(s);  // ((t+s)-s)/(t+s) at t=1
        },
        quad::HalfLine{});
    CHECK(std::abs(cesaro_stieltjes_compose({2.0, 2.0, 2.0}, {1.0, 2.0}, plat, 1.0) -
                   kern_oracle.value) <= 1e-3);  // plateau-edge resolution limited
}

TEST_CASE("otimes product identities") {
    auto f = catalog::h2();
    auto g = catalog::exp_decay(1.0);
    const double t = 1.3;
    auto fg = otimes_product(f, g, t);
    auto ff = otimes_product(f, f, t);
    CHECK(std::abs(ff - 2.0 * f.eval(t) * hilbert_plus(f, t)) <= 1e-9);
    // bilinearity through a scaled copy
    TestFunction f2 = f;
    f2.eval = [&](double s) { return 2.0 * std::pow(1.0 + s, -2.0); };
    CHECK(std::abs(otimes_product(f2, g, t) - 2.0 * fg) <= 1e-9);
}

TEST_CASE("h kernel continuity across the diagonal") {
    const double beta = 1.5, mu = 2.5, t = 1.3, s = 0.7;
    const double limit = h_kernel(beta, mu, t, s, s);
    const double e1 = 1e-3, e2 = 1e-4;
    auto sym = [&](double e) {
        return 0.5 * (h_kernel(beta, mu, t, s, s + e) + h_kernel(beta, mu, t, s, s - e));
    };
    const double extrap =
        (e1 * e1 * sym(e2) - e2 * e2 * sym(e1)) / (e1 * e1 - e2 * e2);
    CHECK(std::abs(limit - extrap) <= 1e-8);
}

TEST_CASE("transform of the convolution product expands") {
    auto f = catalog::h2();
    auto g = catalog::exp_decay(1.0);
    for (double t : {0.6, 1.0, 1.7, 2.5, 4.0}) {
        auto rep = stieltjes_of_otimes(1, 1, f, g, t, 1.5);
        const double prod = stieltjes_apply({1.0, 1.0, 2.0}, f, t) *
                            stieltjes_apply({1.0, 1.0, 2.0}, g, t);
        CHECK(std::abs(rep.lhs - prod) <= 1e-4);
        CHECK(std::abs(rep.rhs - prod) <= 1e-9);
    }
    auto r22 = stieltjes_of_otimes(2, 2, f, g, 1.3, 1.0);
    CHECK(r22.abs_err <= 1e-4);
    CHECK(std::abs(r22.rhs - r22.rhs_alt) <= 1e-10);
    CHECK_THROWS_AS(stieltjes_of_otimes(1, 1, f, g, 1.0, 1.0), unbounded_operator_error);
}

TEST_CASE("real-line transform") {
    auto g = catalog::gauss();
    const StieltjesParams sp{1.0, 2.0, 2.0};
    CHECK(stieltjes_line_apply(sp, g, 1.0) ==
          doctest::Approx(stieltjes_line_apply(sp, g, -1.0)).epsilon(1e-10));
    CHECK(stieltjes_line_apply(sp, g, 0.0) ==
          doctest::Approx(special::beta(1.0, 1.0)).epsilon(1e-12));
    // restriction consistency for a half-line supported input
    TestFunction half = g;
    half.eval = [](double t) { return t > 0.0 ? std::exp(-t * t) : 0.0; };
    TestFunction half_plus = catalog::gauss();
    half_plus.domain = FnDomain::half_line;
    CHECK(stieltjes_line_apply(sp, half, 2.0) ==
          doctest::Approx(stieltjes_apply(sp, half_plus, 2.0)).epsilon(1e-9));
}

TEST_CASE("fourier relation") {
    auto g = catalog::gauss();
    auto rep = fourier_relation_check({1.0, 2.0, 2.0}, g, {-1.0, -0.5, 0.5, 1.0});
    CHECK(rep.max_abs_err <= 1e-4);
    // even input gives an even report
    CHECK(std::abs(rep.lhs[0] - rep.lhs[3]) <= 1e-7);
    CHECK(std::abs(rep.rhs[1] - rep.rhs[2]) <= 1e-10);
    // self-dual parameter line mu = 2 beta - 1
    auto rep2 = fourier_relation_check({1.5, 2.0, 2.0}, g, {0.5, 1.0});
    CHECK(rep2.max_abs_err <= 1e-4);
    CHECK_THROWS_AS(fourier_relation_check({1.0, 2.0, 3.0}, g, {1.0}), std::domain_error);
}

TEST_CASE("laplace iteration cross-check") {
    auto r = laplace_iteration_check({1.0, 1.0, 2.0}, catalog::exp_decay(1.0), 1.0);
    CHECK(r.abs_err <= 1e-5);
    auto r2 = laplace_iteration_check({1.0, 2.0, 2.0}, catalog::plateau(), 2.0);
    CHECK(r2.direct == doctest::Approx(1.0).epsilon(2e-3));
    CHECK(r2.iterated == doctest::Approx(1.0).epsilon(2e-3));
    auto r3 = laplace_iteration_check({1.0, 1.0, 2.0}, catalog::h2(), 2.0);
    CHECK(r3.direct == doctest::Approx(1.0 - std::log(2.0)).epsilon(1e-8));
    CHECK(r3.abs_err <= 1e-5);
}

TEST_CASE("operator expression trees") {
    // adjoint leaf rewrites to the dual parameters
    auto a = normalize(adjoint_op(stieltjes_op({1.0, 2.0, 2.0})));
    REQUIRE(a.kind == OperatorExpr::Kind::stieltjes);
    CHECK(a.sp.beta == doctest::Approx(2.0));
    CHECK(a.sp.mu == doctest::Approx(2.0));
    // double adjoint cancels
    auto b = normalize(adjoint_op(adjoint_op(stieltjes_op({1.3, 2.7, 2.0}))));
    CHECK(b.sp.beta == doctest::Approx(1.3));
    // adjoint distributes over compositions in reverse order
    auto c = normalize(adjoint_op(
        compose_op(stieltjes_op({1.0, 2.0, 2.0}), stieltjes_op({1.5, 2.5, 2.0}))));
    REQUIRE(c.kind == OperatorExpr::Kind::compose);
    CHECK(c.children[0].sp.mu == doctest::Approx(2.5));
    CHECK(c.children[1].sp.mu == doctest::Approx(2.0));

    auto e1 = catalog::exp_decay(1.0);
    const ops::StieltjesParams sp{1.0, 2.0, 2.0};
    CHECK(apply_expr(stieltjes_op(sp), e1, 1.0).real() ==
          doctest::Approx(stieltjes_apply(sp, e1, 1.0)).epsilon(1e-12));
    CHECK(apply_expr(scale_op({2.0, 0.0}, stieltjes_op(sp)), e1, 1.0).real() ==
          doctest::Approx(2.0 * stieltjes_apply(sp, e1, 1.0)).epsilon(1e-12));
    // composition matches a hand-nested evaluation
    const ops::CesaroParams cp{1.0, 2.0};
    TestFunction cf;
    cf.id = "C(e1)";
    cf.decay = DecayClass::rational_decay;
    cf.decay_exponent = 1.0;
    cf.eval = [&](double s) { return cesaro_apply(cp, e1, s); };
    CHECK(apply_expr(compose_op(stieltjes_op(sp), cesaro_op(cp)), e1, 1.0).real() ==
          doctest::Approx(stieltjes_apply(sp, cf, 1.0)).epsilon(1e-8));
    CHECK_THROWS_AS(apply_expr(adjoint_op(cesaro_op(cp)), e1, 1.0),
                    std::invalid_argument);
}

TEST_CASE("rayleigh probe stays inside the norm band") {
    auto probe = rayleigh_probe({1.0, 2.0, 2.0}, 12);
    CHECK(probe.norm_bound == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
    CHECK(probe.best_ratio <= probe.norm_bound * (1.0 + 1e-3));
    CHECK(probe.best_ratio >= 0.6 * probe.norm_bound);
}

TEST_SUITE_END();
