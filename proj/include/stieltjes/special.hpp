#pragma once

#include <complex>

#include "stieltjes/errors.hpp"

namespace stieltjes::special {

using Complex = std::complex<double>;

// log Gamma on C minus the poles {0,-1,-2,...}; Lanczos sum for Re z >= 1/2,
// reflection below. The branch is continuous on each half-plane so that
// exp(log_gamma(x) + log_gamma(y) - ...) stays overflow-free for the
// vertical-line arguments the spectrum sweeps use.
Complex log_gamma(Complex z);
Complex gamma(Complex z);
double gamma(double x);

Complex beta(Complex z, Complex w);
double beta(double z, double w);

double digamma(double x);

// z^alpha, the leading term of Gamma(z+alpha)/Gamma(z) for large |z|.
// Requires Re z > 0, Re alpha > 0.
Complex gamma_ratio_asymptotic(Complex z, Complex alpha);

struct Hyp2F1Args {
    Complex a, b, c, z;
};

// Gauss hypergeometric function, z off the cut [1, inf).
Complex hyp2f1(Complex a, Complex b, Complex c, Complex z);
inline Complex hyp2f1(const Hyp2F1Args& args) {
    return hyp2f1(args.a, args.b, args.c, args.z);
}

// Real-argument evaluator covering all x < 1, including the x -> 1 regime
// via the 1-x connection formulas (digamma expansion when c-a-b is an
// integer). The integral-operator kernels live on this path.
double hyp2f1(double a, double b, double c, double x);

// 2F1(a, b; c; 1 - w) with the complement w passed exactly; the kernel
// quadratures use this so that arguments rounding onto the cut cannot occur.
double hyp2f1_one_minus(double a, double b, double c, double w);

// Raw defining series (converges for |z| < 1). Exposed so identity checks can
// pit an untransformed evaluation against a transformed one.
Complex hyp2f1_series(Complex a, Complex b, Complex c, Complex z);

}  // namespace stieltjes::special
