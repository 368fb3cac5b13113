#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "stieltjes/errors.hpp"

namespace stieltjes::quad {

struct Config {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    long max_evals = 200000;
    // cutoff radius for whole-line / oscillatory-tail handling
    double truncation_radius = 200.0;
    // excision radii for principal values, strictly decreasing toward 0
    std::vector<double> pv_epsilons = {1e-2, 1e-3, 1e-4};

    void validate() const;
};

struct Result {
    double value = 0.0;
    double err_estimate = 0.0;
    long evals = 0;
    bool converged = false;
};

struct ComplexResult {
    std::complex<double> value{0.0, 0.0};
    double err_estimate = 0.0;
    long evals = 0;
    bool converged = false;
};

struct Interval {
    double a;
    double b;
};
struct HalfLine {
    double a = 0.0;  // [a, inf)
};
struct WholeLine {};

using RealFn = std::function<double(double)>;
using ComplexFn = std::function<std::complex<double>(double)>;

Result integrate_real(const RealFn& f, Interval d, const Config& cfg = {});
Result integrate_real(const RealFn& f, HalfLine d, const Config& cfg = {});
Result integrate_real(const RealFn& f, WholeLine d, const Config& cfg = {});

ComplexResult integrate_complex(const ComplexFn& f, Interval d, const Config& cfg = {});
ComplexResult integrate_complex(const ComplexFn& f, HalfLine d, const Config& cfg = {});
ComplexResult integrate_complex(const ComplexFn& f, WholeLine d, const Config& cfg = {});

// Dispatches on the callable's return type.
template <class F, class D>
auto integrate(F&& f, D d, const Config& cfg = {}) {
    using R = std::invoke_result_t<F&, double>;
    if constexpr (std::is_same_v<std::decay_t<R>, std::complex<double>>)
        return integrate_complex(ComplexFn(std::forward<F>(f)), d, cfg);
    else
        return integrate_real(RealFn(std::forward<F>(f)), d, cfg);
}

// \int_a^b (s-a)^p f(s) ds with p > -1: the endpoint weight is absorbed
// exactly by the substitution w = (s-a)^(p+1), so the engine only ever
// sees a regular integrand.
Result integrate_power_left(const RealFn& f, double a, double b, double p,
                            const Config& cfg = {});
// \int_a^b (b-s)^p f(s) ds, p > -1.
Result integrate_power_right(const RealFn& f, double a, double b, double p,
                             const Config& cfg = {});
// \int_0^inf u^p f(u) du, p > -1 (weighted on [0,1], plain on [1,inf)).
Result integrate_power_halfline(const RealFn& f, double p, const Config& cfg = {});

// p.v. \int f over the domain, f having a simple-pole singularity at c.
// Symmetric excision at each cfg.pv_epsilons radius, then polynomial
// extrapolation to eps = 0; err_estimate covers the extrapolation residual.
Result principal_value(const RealFn& f, double c, Interval d, const Config& cfg = {});
Result principal_value(const RealFn& f, double c, HalfLine d, const Config& cfg = {});
Result principal_value(const RealFn& f, double c, WholeLine d, const Config& cfg = {});

// \int f(x) e^{-i xi x} dx. Panels are capped at the oscillation half-period;
// slowly decaying tails are summed half-period by half-period with series
// acceleration.
ComplexResult fourier(const RealFn& f, double xi, WholeLine d, const Config& cfg = {});
ComplexResult fourier(const RealFn& f, double xi, HalfLine d, const Config& cfg = {});
ComplexResult fourier(const RealFn& f, double xi, Interval d, const Config& cfg = {});

inline void require_converged(const Result& r, const char* what) {
    if (!r.converged) throw convergence_error(std::string(what) + ": integral did not converge");
}
inline void require_converged(const ComplexResult& r, const char* what) {
    if (!r.converged) throw convergence_error(std::string(what) + ": integral did not converge");
}

}  // namespace stieltjes::quad
