#pragma once

#include <complex>
#include <vector>

#include "stieltjes/functions.hpp"
#include "stieltjes/quad.hpp"

namespace stieltjes::ops {

using Complex = std::complex<double>;

struct StieltjesParams {
    double beta;
    double mu;
    double p = 2.0;

    // boundedness window 0 < beta - 1/p < mu
    bool is_bounded() const {
        return p >= 1.0 && beta - 1.0 / p > 0.0 && beta - 1.0 / p < mu;
    }
};

struct CesaroParams {
    double gamma;
    double p = 2.0;
};

// A composition tree over the operator family. `normalize` rewrites
// adjoint(S_{beta,mu}) into S_{mu-beta+1,mu} on the conjugate exponent and
// cancels double adjoints; `apply_expr` evaluates the tree right-to-left.
struct OperatorExpr {
    enum class Kind { stieltjes, cesaro, hilbert_plus, hilbert_line, adjoint, scale, compose };
    Kind kind = Kind::stieltjes;
    StieltjesParams sp{1.0, 1.0, 2.0};
    CesaroParams cp{1.0, 2.0};
    Complex factor{1.0, 0.0};
    std::vector<OperatorExpr> children;
};

OperatorExpr stieltjes_op(const StieltjesParams& sp);
OperatorExpr cesaro_op(const CesaroParams& cp);
OperatorExpr hilbert_plus_op();
OperatorExpr hilbert_line_op();
OperatorExpr adjoint_op(OperatorExpr inner);
OperatorExpr scale_op(Complex factor, OperatorExpr inner);
OperatorExpr compose_op(OperatorExpr outer, OperatorExpr inner);

OperatorExpr normalize(const OperatorExpr& expr);
Complex apply_expr(const OperatorExpr& expr, const TestFunction& f, double t,
                   const quad::Config& cfg = {});

// S f(t) = t^{mu-beta} \int_0^inf s^{beta-1} (s+t)^{-mu} f(s) ds, evaluated in
// the substituted form \int_0^inf u^{beta-1} (1+u)^{-mu} f(tu) du.
double stieltjes_apply(const StieltjesParams& sp, const TestFunction& f, double t,
                       const quad::Config& cfg = {});

// Same operator through the dilation-group representation
// \int phi_{mu-beta+1/p, mu}(r) e^{-r/p} f(t e^{-r}) dr.
double stieltjes_subordinated(const StieltjesParams& sp, const TestFunction& f, double t,
                              const quad::Config& cfg = {});

// ||S|| = B(mu - beta + 1/p, beta - 1/p) on the boundedness window.
double stieltjes_norm(const StieltjesParams& sp);

// adjoint swaps (beta, mu, p) -> (mu - beta + 1, mu, p'); involutive.
StieltjesParams adjoint_params(const StieltjesParams& sp);

double cesaro_apply(const CesaroParams& cp, const TestFunction& f, double t,
                    const quad::Config& cfg = {});
double cesaro_norm(const CesaroParams& cp);

double hilbert_norm(double p);  // cot(pi / (2 max(p, p')))

// H_+ f(t) = (i/pi) p.v. \int_0^inf f(s)/(t-s) ds
Complex hilbert_plus(const TestFunction& f, double t, const quad::Config& cfg = {});

// Whole-line transform assembled from the half-line pieces:
// H f(t) = H_+ f_+(t) + (i/pi) S f~(t) for t > 0 and mirrored for t < 0.
Complex hilbert_line(const TestFunction& f, double t, const quad::Config& cfg = {});

// S_{beta,mu} S_{gamma,nu} f(t) as a single quadrature against the
// hypergeometric kernel split at s = t.
double compose_stieltjes(const StieltjesParams& p1, const StieltjesParams& p2,
                         const TestFunction& f, double t, const quad::Config& cfg = {});

// S_{beta,mu} C_gamma f(t) through the closed kernel
// gamma B(gamma, mu-beta+1) t^{mu-beta} \int s^{beta-1}(s+t)^{-mu} 2F1(...) f.
double cesaro_stieltjes_compose(const StieltjesParams& sp, const CesaroParams& cp,
                                const TestFunction& f, double t,
                                const quad::Config& cfg = {});

// f (x) g = f H_+ g + g H_+ f
Complex otimes_product(const TestFunction& f, const TestFunction& g, double t,
                       const quad::Config& cfg = {});

// (s^{beta-1}(t+u)^mu - u^{beta-1}(t+s)^mu)/(u-s), continuous across u = s.
double h_kernel(double beta, double mu, double t, double s, double u);

struct ExpansionTerm {
    int i, j;
    double coef;
    double sf, sg;  // the two transform factors
};

struct OtimesReport {
    double lhs;      // S_{n,m} applied to the convolution product
    double rhs;      // binomial double-sum expansion
    double rhs_alt;  // regrouped form of the same expansion
    double abs_err;  // |lhs - rhs|
    std::vector<ExpansionTerm> terms;
};

// Evaluates both sides of the S_{n,m}(f (x) g) expansion at a point. The
// convolution product enters with the bare 1/(s-t) kernel normalization,
// which is the one the product identity holds for.
OtimesReport stieltjes_of_otimes(int n, int m, const TestFunction& f, const TestFunction& g,
                                 double t, double r = 1.0, const quad::Config& cfg = {});

// Real-line extension; at t = 0 the value is B(beta, mu-beta) f(0).
double stieltjes_line_apply(const StieltjesParams& sp, const TestFunction& f, double t,
                            const quad::Config& cfg = {});

struct FourierRelationReport {
    std::vector<double> x;
    std::vector<Complex> lhs;  // Fourier transform of S f
    std::vector<Complex> rhs;  // S' of the Fourier transform
    double max_abs_err = 0.0;
};
FourierRelationReport fourier_relation_check(const StieltjesParams& sp, const TestFunction& f,
                                             const std::vector<double>& x_grid,
                                             const quad::Config& cfg = {});

struct LaplaceIterationReport {
    double direct;
    double iterated;
    double abs_err;
};
// Cross-checks S f(t) against the doubled Laplace transform route.
LaplaceIterationReport laplace_iteration_check(const StieltjesParams& sp,
                                               const TestFunction& f, double t,
                                               const quad::Config& cfg = {});

struct RayleighProbe {
    double norm_bound;  // closed-form operator norm
    double best_ratio;  // max ||S g||_p / ||g||_p over the random span
    std::vector<double> ratios;
};
RayleighProbe rayleigh_probe(const StieltjesParams& sp, int combos = 20,
                             unsigned seed = 20240615, const quad::Config& cfg = {});

}  // namespace stieltjes::ops
