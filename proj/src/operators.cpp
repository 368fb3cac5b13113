#include "stieltjes/operators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "stieltjes/kernels.hpp"
#include "stieltjes/special.hpp"

namespace stieltjes::ops {

namespace {

void check_pointwise(const StieltjesParams& sp, const TestFunction& f) {
    if (sp.beta <= 0.0)
        throw integrability_error("stieltjes: beta must be > 0 for a convergent kernel");
    if (f.decay == DecayClass::rational_decay && f.decay_exponent <= sp.beta - sp.mu)
        throw integrability_error("stieltjes: '" + f.id + "' decays too slowly for (beta, mu)");
}

void require_bounded(const StieltjesParams& sp, const char* who) {
    if (!sp.is_bounded())
        throw unbounded_operator_error(std::string(who) +
                                       ": requires 0 < beta - 1/p < mu (beta=" +
                                       std::to_string(sp.beta) + ", mu=" + std::to_string(sp.mu) +
                                       ", p=" + std::to_string(sp.p) + ")");
}

// Loud non-convergence: a conservative estimate slightly above target is
// fine, a value two orders beyond the requested tolerance must not be used
// silently.
double settled(const quad::Result& r, const quad::Config& cfg, const char* who) {
    if (!r.converged &&
        r.err_estimate >
            100.0 * std::max(cfg.abs_tol, cfg.rel_tol * std::max(1.0, std::abs(r.value))))
        throw convergence_error(std::string(who) + ": quadrature did not converge");
    return r.value;
}

// The excision extrapolation carries an O(eps1*eps2) residual, so a
// singular-integral evaluation cannot certify much below ~1e-7 relative;
// floor the config accordingly (the end-to-end targets are 1e-4..1e-6).
quad::Config pv_config(const quad::Config& cfg) {
    quad::Config out = cfg;
    out.abs_tol = std::max(cfg.abs_tol, 1e-10);
    out.rel_tol = std::max(cfg.rel_tol, 1e-7);
    return out;
}

// The excised values must stabilize; the conservative residual estimate may
// miss the requested tolerance even when they clearly do.
void require_stabilized(const quad::Result& r, const char* who) {
    if (r.converged) return;
    if (r.err_estimate <= 1e-5 * std::max(1.0, std::abs(r.value))) return;
    throw convergence_error(std::string(who) + ": excised integrals did not stabilize");
}

// p.v. \int_0^inf f(u)/(u - s) du  (note the sign relative to the engine's
// 1/(c - u) kernel)
double cauchy_halfline(const TestFunction& f, double s, const quad::Config& cfg) {
    auto r = quad::principal_value(f.eval, s, quad::HalfLine{}, pv_config(cfg));
    require_stabilized(r, "hilbert");
    return -r.value;
}

// classical S_{1,1} g(x) = \int_0^inf g(s)/(x+s) ds for x > 0
double classical_stieltjes(const std::function<double(double)>& g, double x,
                           const quad::Config& cfg) {
    auto r = quad::integrate_real([&](double u) { return g(x * u) / (1.0 + u); },
                                  quad::HalfLine{}, cfg);
    return r.value;
}

}  // namespace


OperatorExpr stieltjes_op(const StieltjesParams& sp) {
    OperatorExpr e;
    e.kind = OperatorExpr::Kind::stieltjes;
    e.sp = sp;
    return e;
}

OperatorExpr cesaro_op(const CesaroParams& cp) {
    OperatorExpr e;
    e.kind = OperatorExpr::Kind::cesaro;
    e.cp = cp;
    return e;
}

OperatorExpr hilbert_plus_op() {
    OperatorExpr e;
    e.kind = OperatorExpr::Kind::hilbert_plus;
    return e;
}

OperatorExpr hilbert_line_op() {
    OperatorExpr e;
    e.kind = OperatorExpr::Kind::hilbert_line;
    return e;
}

OperatorExpr adjoint_op(OperatorExpr inner) {
    OperatorExpr e;
    e.kind = OperatorExpr::Kind::adjoint;
    e.children.push_back(std::move(inner));
    return e;
}

OperatorExpr scale_op(Complex factor, OperatorExpr inner) {
    OperatorExpr e;
    e.kind = OperatorExpr::Kind::scale;
    e.factor = factor;
    e.children.push_back(std::move(inner));
    return e;
}

OperatorExpr compose_op(OperatorExpr outer, OperatorExpr inner) {
    OperatorExpr e;
    e.kind = OperatorExpr::Kind::compose;
    e.children.push_back(std::move(outer));
    e.children.push_back(std::move(inner));
    return e;
}

OperatorExpr normalize(const OperatorExpr& expr) {
    OperatorExpr out = expr;
    for (auto& ch : out.children) ch = normalize(ch);
    if (out.kind != OperatorExpr::Kind::adjoint) return out;
    const OperatorExpr& inner = out.children.front();
    switch (inner.kind) {
        case OperatorExpr::Kind::stieltjes:
            return stieltjes_op(adjoint_params(inner.sp));
        case OperatorExpr::Kind::adjoint:
            return inner.children.front();
        case OperatorExpr::Kind::scale:
            return scale_op(std::conj(inner.factor),
                            normalize(adjoint_op(inner.children.front())));
        case OperatorExpr::Kind::compose:
            return compose_op(normalize(adjoint_op(inner.children[1])),
                              normalize(adjoint_op(inner.children[0])));
        default:
            return out;  // no rewrite known for this leaf
    }
}

Complex apply_expr(const OperatorExpr& expr, const TestFunction& f, double t,
                   const quad::Config& cfg) {
    const OperatorExpr e = normalize(expr);
    switch (e.kind) {
        case OperatorExpr::Kind::stieltjes:
            return Complex(stieltjes_apply(e.sp, f, t, cfg), 0.0);
        case OperatorExpr::Kind::cesaro:
            return Complex(cesaro_apply(e.cp, f, t, cfg), 0.0);
        case OperatorExpr::Kind::hilbert_plus:
            return hilbert_plus(f, t, cfg);
        case OperatorExpr::Kind::hilbert_line:
            return hilbert_line(f, t, cfg);
        case OperatorExpr::Kind::scale:
            return e.factor * apply_expr(e.children.front(), f, t, cfg);
        case OperatorExpr::Kind::compose: {
            // apply the inner operator pointwise, real and imaginary parts
            // wrapped as operands of the outer one
            const OperatorExpr inner = e.children[1];
            auto part = [&](bool imag_part) {
                TestFunction w;
                w.id = "expr";
                w.decay = DecayClass::rational_decay;
                w.decay_exponent = 1.0;
                w.eval = [&, inner, imag_part](double s) {
                    const Complex v = apply_expr(inner, f, s, cfg);
                    return imag_part ? v.imag() : v.real();
                };
                return apply_expr(e.children[0], w, t, cfg);
            };
            return part(false) + Complex(0.0, 1.0) * part(true);
        }
        case OperatorExpr::Kind::adjoint:
            throw std::invalid_argument(
                "apply_expr: no adjoint rewrite for this operator kind");
    }
    throw std::logic_error("apply_expr: unreachable");
}

double stieltjes_apply(const StieltjesParams& sp, const TestFunction& f, double t,
                       const quad::Config& cfg) {
    if (t <= 0.0) throw std::domain_error("stieltjes_apply: t must be > 0");
    check_pointwise(sp, f);
    auto r = quad::integrate_power_halfline(
        [&](double u) { return std::pow(1.0 + u, -sp.mu) * f.eval(t * u); }, sp.beta - 1.0,
        cfg);
    return settled(r, cfg, "stieltjes_apply");
}

double stieltjes_subordinated(const StieltjesParams& sp, const TestFunction& f, double t,
                              const quad::Config& cfg) {
    require_bounded(sp, "stieltjes_subordinated");
    // phi_{mu-beta+1/p, mu}(r) e^{-r/p} collapses to phi_{mu-beta, mu}(r),
    // which keeps both factors finite over the whole line
    const kernels::PhiParams weight{sp.mu - sp.beta, sp.mu};
    auto r = quad::integrate_real(
        [&](double rr) { return kernels::phi(weight, rr) * f.eval(t * std::exp(-rr)); },
        quad::WholeLine{}, cfg);
    return settled(r, cfg, "stieltjes_subordinated");
}

double stieltjes_norm(const StieltjesParams& sp) {
    require_bounded(sp, "stieltjes_norm");
    return special::beta(sp.mu - sp.beta + 1.0 / sp.p, sp.beta - 1.0 / sp.p);
}

StieltjesParams adjoint_params(const StieltjesParams& sp) {
    if (sp.p <= 1.0)
        throw std::domain_error("adjoint_params: p must be > 1 (no dual pairing at p = 1)");
    return StieltjesParams{sp.mu - sp.beta + 1.0, sp.mu, sp.p / (sp.p - 1.0)};
}

double cesaro_apply(const CesaroParams& cp, const TestFunction& f, double t,
                    const quad::Config& cfg) {
    if (cp.gamma <= 0.0) throw integrability_error("cesaro_apply: gamma must be > 0");
    if (t <= 0.0) throw std::domain_error("cesaro_apply: t must be > 0");
    auto r = quad::integrate_power_right(f.eval, 0.0, t, cp.gamma - 1.0, cfg);
    return cp.gamma * std::pow(t, -cp.gamma) * settled(r, cfg, "cesaro_apply");
}

double cesaro_norm(const CesaroParams& cp) {
    if (cp.p <= 1.0) throw unbounded_operator_error("cesaro_norm: requires p > 1");
    if (cp.gamma <= 0.0) throw std::domain_error("cesaro_norm: gamma must be > 0");
    return cp.gamma * special::beta(cp.gamma, 1.0 - 1.0 / cp.p);
}

double hilbert_norm(double p) {
    if (p <= 1.0) throw unbounded_operator_error("hilbert_norm: requires p > 1");
    const double pstar = std::max(p, p / (p - 1.0));
    return 1.0 / std::tan(M_PI / (2.0 * pstar));
}

Complex hilbert_plus(const TestFunction& f, double t, const quad::Config& cfg) {
    if (t <= 0.0) throw std::domain_error("hilbert_plus: t must be > 0");
    auto r = quad::principal_value(f.eval, t, quad::HalfLine{}, pv_config(cfg));
    require_stabilized(r, "hilbert_plus");
    return Complex(0.0, 1.0 / M_PI) * r.value;
}

Complex hilbert_line(const TestFunction& f, double t, const quad::Config& cfg) {
    if (f.domain != FnDomain::whole_line)
        throw std::invalid_argument("hilbert_line: needs a whole-line function");
    const Complex i_over_pi(0.0, 1.0 / M_PI);
    if (t > 0.0) {
        auto plus = quad::principal_value(f.eval, t, quad::HalfLine{}, pv_config(cfg));
        require_stabilized(plus, "hilbert_line");
        const double s = classical_stieltjes([&](double u) { return f.eval(-u); }, t, cfg);
        return i_over_pi * (plus.value + s);
    }
    if (t < 0.0) {
        auto plus = quad::principal_value([&](double u) { return f.eval(-u); }, -t,
                                          quad::HalfLine{}, pv_config(cfg));
        require_stabilized(plus, "hilbert_line");
        const double s = classical_stieltjes(f.eval, -t, cfg);
        return -i_over_pi * (plus.value + s);
    }
    auto r = quad::integrate_real([&](double s) { return (f.eval(-s) - f.eval(s)) / s; },
                                  quad::HalfLine{}, cfg);
    return i_over_pi * r.value;
}

double compose_stieltjes(const StieltjesParams& p1, const StieltjesParams& p2,
                         const TestFunction& f, double t, const quad::Config& cfg) {
    if (p1.p != p2.p)
        throw std::invalid_argument("compose_stieltjes: operators must share the exponent p");
    require_bounded(p1, "compose_stieltjes");
    require_bounded(p2, "compose_stieltjes");
    if (t <= 0.0) throw std::domain_error("compose_stieltjes: t must be > 0");
    const double b = p1.beta, m = p1.mu, g = p2.beta, v = p2.mu;
    const double pref = special::beta(b + v - g, g + m - b);

    // both pieces in the unit variable w, so the hypergeometric argument's
    // complement is available exactly: s = t w below t, s = t / w above it
    auto inner = quad::integrate_power_left(
        [&](double w) {
            return f.eval(t * w) * special::hyp2f1_one_minus(m, b + v - g, m + v, w);
        },
        0.0, 1.0, b - 1.0, cfg);
    quad::Result outer;
    if (m - b > 0.0) {
        outer = quad::integrate_power_left(
            [&](double w) {
                return f.eval(t / w) * special::hyp2f1_one_minus(m, g + m - b, m + v, w);
            },
            0.0, 1.0, m - b - 1.0, cfg);
    } else {
        // w^{mu-beta-1} is not integrable on its own; f(t/w) -> 0 rescues it
        outer = quad::integrate_real(
            [&](double w) {
                return f.eval(t / w) * std::pow(w, m - b - 1.0) *
                       special::hyp2f1_one_minus(m, g + m - b, m + v, w);
            },
            quad::Interval{0.0, 1.0}, cfg);
    }
    return pref * (settled(inner, cfg, "compose_stieltjes") + settled(outer, cfg, "compose_stieltjes"));
}

double cesaro_stieltjes_compose(const StieltjesParams& sp, const CesaroParams& cp,
                                const TestFunction& f, double t, const quad::Config& cfg) {
    require_bounded(sp, "cesaro_stieltjes_compose");
    if (cp.gamma <= 0.0 || sp.p <= 1.0)
        throw std::domain_error("cesaro_stieltjes_compose: requires gamma > 0 and p > 1");
    if (t <= 0.0) throw std::domain_error("cesaro_stieltjes_compose: t must be > 0");
    const double b = sp.beta, m = sp.mu, g = cp.gamma;
    const double pref = g * special::beta(g, m - b + 1.0);
    auto r = quad::integrate_power_halfline(
        [&](double s) {
            return std::pow(s + t, -m) *
                   special::hyp2f1_one_minus(m, g, m - b + 1.0 + g, s / (s + t)) * f.eval(s);
        },
        b - 1.0, cfg);
    return pref * std::pow(t, m - b) * settled(r, cfg, "cesaro_stieltjes_compose");
}

Complex otimes_product(const TestFunction& f, const TestFunction& g, double t,
                       const quad::Config& cfg) {
    return f.eval(t) * hilbert_plus(g, t, cfg) + g.eval(t) * hilbert_plus(f, t, cfg);
}

double h_kernel(double beta, double mu, double t, double s, double u) {
    if (std::abs(u - s) <= 1e-7 * std::max(std::abs(u), std::abs(s))) {
        // limit value: d/du [s^{beta-1}(t+u)^mu - u^{beta-1}(t+s)^mu] at u = s
        return mu * std::pow(s, beta - 1.0) * std::pow(t + s, mu - 1.0) -
               (beta - 1.0) * std::pow(s, beta - 2.0) * std::pow(t + s, mu);
    }
    return (std::pow(s, beta - 1.0) * std::pow(t + u, mu) -
            std::pow(u, beta - 1.0) * std::pow(t + s, mu)) /
           (u - s);
}

namespace {

// (f (x) g)(s) with the bare kernel: f(s) pv\int g(u)/(u-s) du + (f <-> g)
double otimes_bare(const TestFunction& f, const TestFunction& g, double s,
                   const quad::Config& cfg) {
    return f.eval(s) * cauchy_halfline(g, s, cfg) + g.eval(s) * cauchy_halfline(f, s, cfg);
}

}  // namespace

OtimesReport stieltjes_of_otimes(int n, int m, const TestFunction& f, const TestFunction& g,
                                 double t, double r, const quad::Config& cfg) {
    if (n < 1 || m < n) throw std::invalid_argument("stieltjes_of_otimes: need 1 <= n <= m");
    if (!(0.0 < n - 1.0 / r && n - 1.0 / r < m))
        throw unbounded_operator_error("stieltjes_of_otimes: requires 0 < n - 1/r < m");

    OtimesReport rep{};

    // left side: pointwise convolution product under S_{n,m}
    quad::Config inner = cfg;
    inner.abs_tol = std::max(cfg.abs_tol, 1e-9);
    inner.rel_tol = std::max(cfg.rel_tol, 1e-7);
    auto lhs = quad::integrate_power_halfline(
        [&](double u) {
            return std::pow(1.0 + u, double(-m)) * otimes_bare(f, g, t * u, inner);
        },
        double(n - 1), inner);
    rep.lhs = lhs.value;

    // right side: the binomial double sum over plain transforms
    auto S = [&](int k, const TestFunction& h) {
        return stieltjes_apply({double(k), double(m), 2.0}, h, t, cfg);
    };
    std::vector<double> sf(size_t(m) + 1), sg(size_t(m) + 1);
    for (int k = 1; k <= m; ++k) {
        sf[size_t(k)] = S(k, f);
        sg[size_t(k)] = S(k, g);
    }
    auto binom = [](int mm, int ii) {
        double out = 1.0;
        for (int k = 0; k < ii; ++k) out = out * (mm - k) / (k + 1.0);
        return out;
    };

    double rhs = 0.0;
    for (int i = n; i <= m; ++i)
        for (int j = 0; j <= i - n; ++j) {
            const double coef = binom(m, i);
            const double term = coef * sf[size_t(i - j)] * sg[size_t(n + j)];
            rhs += term;
            rep.terms.push_back({i, j, coef, sf[size_t(i - j)], sg[size_t(n + j)]});
        }
    for (int i = 0; i <= n - 2; ++i)
        for (int j = 0; j <= n - 2 - i; ++j) {
            const double coef = -binom(m, i);
            const double term = coef * sf[size_t(n - j - 1)] * sg[size_t(i + j + 1)];
            rhs += term;
            rep.terms.push_back({i, j, coef, sf[size_t(n - j - 1)], sg[size_t(i + j + 1)]});
        }
    rep.rhs = rhs;

    // regrouped form of the same expansion
    double alt = 0.0;
    for (int i = 0; i <= m - n; ++i) {
        double acc = 0.0;
        for (int j = n + i; j <= m; ++j) acc += binom(m, j) * sg[size_t(j - i)];
        alt += sf[size_t(n + i)] * acc;
    }
    for (int i = 1; i <= n - 1; ++i) {
        double acc = 0.0;
        for (int j = 0; j <= n - 1 - i; ++j) acc += binom(m, j) * sg[size_t(i + j)];
        alt -= sf[size_t(n - i)] * acc;
    }
    rep.rhs_alt = alt;
    rep.abs_err = std::abs(rep.lhs - rep.rhs);
    return rep;
}

double stieltjes_line_apply(const StieltjesParams& sp, const TestFunction& f, double t,
                            const quad::Config& cfg) {
    check_pointwise(sp, f);
    if (f.domain != FnDomain::whole_line)
        throw std::invalid_argument("stieltjes_line_apply: needs a whole-line function");
    // at the origin the transform collapses to a Beta multiple of f(0)
    if (t == 0.0) return special::beta(sp.beta, sp.mu - sp.beta) * f.eval(0.0);
    auto r = quad::integrate_power_halfline(
        [&](double u) { return std::pow(1.0 + u, -sp.mu) * f.eval(t * u); }, sp.beta - 1.0,
        cfg);
    return settled(r, cfg, "stieltjes_line_apply");
}

FourierRelationReport fourier_relation_check(const StieltjesParams& sp, const TestFunction& f,
                                             const std::vector<double>& x_grid,
                                             const quad::Config& cfg) {
    if (sp.p < 1.0 || sp.p > 2.0)
        throw std::domain_error("fourier_relation_check: requires 1 <= p <= 2");
    require_bounded(sp, "fourier_relation_check");
    if (!f.has_fourier())
        throw std::invalid_argument(
            "fourier_relation_check: needs a catalog entry with a classical Fourier transform");

    TestFunction fhat;
    fhat.id = "hat(" + f.id + ")";
    fhat.domain = FnDomain::whole_line;
    fhat.decay = DecayClass::schwartz;
    fhat.eval = f.fourier;

    const StieltjesParams dual{sp.mu - sp.beta + 1.0, sp.mu,
                               sp.p > 1.0 ? sp.p / (sp.p - 1.0) : 2.0};

    quad::Config inner = cfg;
    inner.abs_tol = std::max(cfg.abs_tol, 1e-9);
    inner.rel_tol = std::max(cfg.rel_tol, 1e-8);

    FourierRelationReport rep;
    rep.x = x_grid;
    for (double x : x_grid) {
        auto lhs = quad::fourier(
            [&](double t) { return stieltjes_line_apply(sp, f, t, inner); }, x,
            quad::WholeLine{}, inner);
        const double rhs = stieltjes_line_apply(dual, fhat, x, inner);
        rep.lhs.push_back(lhs.value);
        rep.rhs.push_back(Complex(rhs, 0.0));
        rep.max_abs_err = std::max(rep.max_abs_err, std::abs(lhs.value - rhs));
    }
    return rep;
}

LaplaceIterationReport laplace_iteration_check(const StieltjesParams& sp,
                                               const TestFunction& f, double t,
                                               const quad::Config& cfg) {
    require_bounded(sp, "laplace_iteration_check");
    if (t <= 0.0) throw std::domain_error("laplace_iteration_check: t must be > 0");
    LaplaceIterationReport rep{};
    rep.direct = stieltjes_apply(sp, f, t, cfg);

    quad::Config inner = cfg;
    inner.abs_tol = std::max(cfg.abs_tol, 1e-11);
    inner.rel_tol = std::max(cfg.rel_tol, 1e-9);
    auto laplace_inner = [&](double x) {
        auto r = quad::integrate_power_halfline(
            [&](double s) { return std::exp(-x * s) * f.eval(s); }, sp.beta - 1.0, inner);
        return r.value;
    };
    auto outer = quad::integrate_power_halfline(
        [&](double x) { return std::exp(-t * x) * laplace_inner(x); }, sp.mu - 1.0, inner);
    rep.iterated = std::pow(t, sp.mu - sp.beta) * outer.value / special::gamma(sp.mu);
    rep.abs_err = std::abs(rep.direct - rep.iterated);
    return rep;
}

RayleighProbe rayleigh_probe(const StieltjesParams& sp, int combos, unsigned seed,
                             const quad::Config& cfg) {
    RayleighProbe probe;
    probe.norm_bound = stieltjes_norm(sp);

    // span: exponentials plus wide near-extremal power bumps t^(-1/p + delta)
    std::vector<TestFunction> basis;
    basis.push_back(catalog::exp_decay(0.4));
    basis.push_back(catalog::exp_decay(1.0));
    basis.push_back(catalog::exp_decay(2.5));
    basis.push_back(catalog::recip1p(1.0 / sp.p + 0.6));
    basis.push_back(catalog::bump(1.0 - 1.0 / sp.p + 0.05, 1e5, 1e-5));
    basis.push_back(catalog::bump(1.0 - 1.0 / sp.p + 0.15, 1e4, 1e-4));
    const size_t k = basis.size();

    // fixed log grid; the probe band only needs percent-level accuracy
    const int M = 321;
    const double L = 16.0;
    std::vector<double> tj(M), wj(M);
    for (int j = 0; j < M; ++j) {
        const double y = -L + 2.0 * L * j / (M - 1);
        tj[j] = std::exp(y);
        wj[j] = tj[j] * 2.0 * L / (M - 1) * (j == 0 || j == M - 1 ? 0.5 : 1.0);
    }
    quad::Config fast = cfg;
    fast.abs_tol = 1e-9;
    fast.rel_tol = 1e-6;
    fast.max_evals = std::max(cfg.max_evals, 400000L);
    std::vector<std::vector<double>> A(k, std::vector<double>(M));
    std::vector<std::vector<double>> B(k, std::vector<double>(M));
    for (size_t i = 0; i < k; ++i)
        for (int j = 0; j < M; ++j) {
            A[i][j] = stieltjes_apply(sp, basis[i], tj[j], fast);
            B[i][j] = basis[i].eval(tj[j]);
        }

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int c = 0; c < combos; ++c) {
        std::vector<double> coef(k);
        for (auto& x : coef) x = unif(rng);
        double num = 0.0, den = 0.0;
        for (int j = 0; j < M; ++j) {
            double sg = 0.0, gg = 0.0;
            for (size_t i = 0; i < k; ++i) {
                sg += coef[i] * A[i][j];
                gg += coef[i] * B[i][j];
            }
            num += wj[j] * std::pow(std::abs(sg), sp.p);
            den += wj[j] * std::pow(std::abs(gg), sp.p);
        }
        probe.ratios.push_back(std::pow(num / den, 1.0 / sp.p));
    }
    probe.best_ratio = *std::max_element(probe.ratios.begin(), probe.ratios.end());
    return probe;
}

}  // namespace stieltjes::ops
