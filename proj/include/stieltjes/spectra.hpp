#pragma once

#include <complex>
#include <vector>

#include "stieltjes/errors.hpp"

namespace stieltjes::spectra {

using Complex = std::complex<double>;

// Sampled spectrum curve xi -> B(gamma + i xi, mu - gamma - i xi). The
// negative-xi half mirrors the positive one by conjugation, so the symmetry
// holds exactly in the stored points.
struct SpectrumCurve {
    double gamma = 0.0;
    double mu = 0.0;
    std::vector<double> xi;
    std::vector<Complex> points;
    bool closure_includes_zero = true;
    // set when |endpoint| has not decayed below 1e-3 * apex
    bool decay_warning = false;
};

SpectrumCurve curve_sample(double gamma, double mu, double xi_max = 8.0, int n = 2001);

// sigma(C_gamma) on exponent p: xi -> gamma B(gamma, 1 - 1/p + i xi).
SpectrumCurve cesaro_spectrum_sample(double gamma, double p, double xi_max = 8.0,
                                     int n = 2001);

struct CurvePredicates {
    bool real_interval = false;
    // whole curve in the positive-real half-plane (the C+ of conjugate-
    // symmetric curves)
    bool upper_halfplane = false;
    std::vector<double> real_axis_crossings;  // Re values where Im vanishes
    Complex apex;                             // point at xi = 0
    double enclosing_radius = 0.0;            // B(gamma, mu - gamma)
};

CurvePredicates curve_predicates(const SpectrumCurve& c);

struct RealInterval {
    double lo;
    double hi;
};

// sigma(S_{beta, 2 beta - 2/p}) = [0, B(beta - 1/p, beta - 1/p)]; p = 2 is
// the self-adjoint family.
RealInterval self_adjoint_interval(double beta, double p = 2.0);

}  // namespace stieltjes::spectra
