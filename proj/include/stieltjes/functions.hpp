#pragma once

#include <functional>
#include <limits>
#include <string>

namespace stieltjes {

enum class FnDomain { half_line, whole_line };
enum class DecayClass { schwartz, rational_decay, compact_support };

// A catalogued operand for the integral transforms. Closed-form derivative
// and Weyl data ride along when the entry has them; everything downstream
// falls back to quadrature/stencils otherwise.
struct TestFunction {
    std::string id;
    FnDomain domain = FnDomain::half_line;
    DecayClass decay = DecayClass::schwartz;
    double decay_exponent = 0.0;  // |f| ~ t^-decay_exponent when rational_decay
    double support_radius = std::numeric_limits<double>::infinity();
    std::function<double(double)> eval;
    // n-th derivative, n = 1..4; empty when no closed form
    std::function<double(int, double)> deriv;
    // closed-form W_+^alpha f(t) for any real alpha (negative = integral)
    std::function<double(double, double)> weyl_plus;
    // closed-form Fourier transform, when classical
    std::function<double(double)> fourier;

    double operator()(double t) const { return eval(t); }
    bool has_deriv() const { return static_cast<bool>(deriv); }
    bool has_weyl() const { return static_cast<bool>(weyl_plus); }
    bool has_fourier() const { return static_cast<bool>(fourier); }
};

namespace catalog {

TestFunction exp_decay(double lambda = 1.0);          // e^{-lambda t}
TestFunction recip1p(double rho, double a = 1.0);     // (a+t)^-rho
TestFunction h2();                                    // (1+t)^-2
TestFunction gauss();                                 // e^{-t^2} on R
TestFunction plateau(double inner = 1e-4, double outer = 1e4);
TestFunction bump(double gamma_, double T, double inner = 1e-6);  // ~ t^{gamma-1} cut at T

// id grammar: "exp:lambda", "recip1p:rho", "h2", "gauss", "plateau",
// "bump:gamma,T"
TestFunction parse(const std::string& id);

}  // namespace catalog

// f(lambda t); Weyl data transforms by the scaling rule.
TestFunction scaled(const TestFunction& f, double lambda);
// e^{-t/p} f(e^{-t} s), the dilation-group orbit.
TestFunction dilated(const TestFunction& f, double t, double p);
// pointwise product; derivatives via Leibniz when both factors have them.
TestFunction product(const TestFunction& f, const TestFunction& g);
// f(-t) for whole-line entries.
TestFunction reflected(const TestFunction& f);

}  // namespace stieltjes
