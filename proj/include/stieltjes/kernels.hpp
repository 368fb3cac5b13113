#pragma once

#include <vector>

#include "stieltjes/special.hpp"

namespace stieltjes::kernels {

using special::Complex;

// phi(t) = e^{beta t} / (1 + e^t)^mu
struct PhiParams {
    double beta;
    double mu;
};

// psi(t) = gamma (1 - e^{-t})^{gamma-1} e^{-nu t} on (0, inf), 0 elsewhere
struct PsiParams {
    double gamma;
    double nu;
};

double phi(const PhiParams& p, double t);
double phi_sup_norm(const PhiParams& p);
double phi_lp_norm(const PhiParams& p, double exponent);
Complex phi_fourier(const PhiParams& p, double xi);

// Coefficients of the polynomial P_n with d^n/dt^n phi = phi * P_n(logistic),
// built from the two-term recursion in m.
struct PolyCoeffTable {
    int order = 0;
    std::vector<double> coeffs;  // a_0 .. a_order
};
PolyCoeffTable phi_derivative_poly(const PhiParams& p, int n);
// n-th derivative of phi reconstructed from a coefficient table.
double phi_derivative(const PhiParams& p, const PolyCoeffTable& table, double t);
// Exact-rational cross-check of the recursion-built table against the closed
// form, for rational beta = bn/bd, mu = mn/md. Small orders only.
bool phi_poly_recursion_exact(long long bn, long long bd, long long mn, long long md, int n);

double psi(const PsiParams& p, double t);
double psi_sup_norm(const PsiParams& p);
double psi_lp_norm(const PsiParams& p, double exponent);
Complex psi_fourier(const PsiParams& p, double xi);

// (phi_p * phi_q)(t), requires 0 < beta < mu on both parameter pairs.
double phi_conv_phi(const PhiParams& p, const PhiParams& q, double t);
// (phi_p * psi_q)(t), all four parameters positive.
double phi_conv_psi(const PhiParams& p, const PsiParams& q, double t);

}  // namespace stieltjes::kernels
