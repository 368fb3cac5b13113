#pragma once

#include "stieltjes/functions.hpp"
#include "stieltjes/quad.hpp"

namespace stieltjes::fractional {

// W_+^{-alpha} f(t) = (1/Gamma(alpha)) \int_t^inf (s-t)^{alpha-1} f(s) ds, alpha > 0.
double weyl_integral(const TestFunction& f, double alpha, double t,
                     const quad::Config& cfg = {});

// W_+^alpha f(t) = (-1)^n d^n/dt^n W_+^{-(n-alpha)} f(t). Uses the entry's
// closed form when available; otherwise a stencil over the inner quadrature.
double weyl_derivative(const TestFunction& f, double alpha, double t,
                       const quad::Config& cfg = {});

// D_+^alpha f(t) = t^alpha W_+^alpha f(t) / Gamma(alpha+1); alpha = 0 is f.
double d_plus(const TestFunction& f, double alpha, double t, const quad::Config& cfg = {});

// (D_+^alpha)^{-1} g(t) = alpha \int_t^inf (s-t)^{alpha-1} g(s) s^{-alpha} ds.
double d_plus_inverse(const TestFunction& g, double alpha, double t,
                      const quad::Config& cfg = {});

// ||f||_{alpha,p} = || D_+^alpha f ||_{L^p(0,inf)}.
double sobolev_norm(const TestFunction& f, double alpha, double p,
                    const quad::Config& cfg = {});

// T_{t,p} f = e^{-t/p} f(e^{-t} .), the isometric dilation orbit.
TestFunction dilation(const TestFunction& f, double t, double p);

// <f,g>_alpha = \int_0^inf D_+^alpha f D_+^alpha g dt.
double pairing(const TestFunction& f, const TestFunction& g, double alpha,
               const quad::Config& cfg = {});

struct HolderReport {
    double lhs;          // ||fg||_{alpha,1}
    double rhs_product;  // ||f||_{alpha,p} ||g||_{alpha,p'}
    double ratio;
};
HolderReport holder_check(const TestFunction& f, const TestFunction& g, double alpha,
                          double p, const quad::Config& cfg = {});

// W_0^alpha on the line: W_- for t < 0, W_+ for t > 0 (t = 0 excluded).
double weyl_zero_line(const TestFunction& f, double alpha, double t,
                      const quad::Config& cfg = {});

// D_0^alpha f(t) = |t|^alpha W_0^alpha f(t) / Gamma(alpha+1).
double d_zero(const TestFunction& f, double alpha, double t, const quad::Config& cfg = {});

}  // namespace stieltjes::fractional
