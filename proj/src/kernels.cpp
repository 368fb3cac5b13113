#include "stieltjes/kernels.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace stieltjes::kernels {

namespace {

// log(1 + e^t) without overflow
double softplus(double t) {
    return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
}

double logistic(double t) { return 1.0 / (1.0 + std::exp(-t)); }

}  // namespace

double phi(const PhiParams& p, double t) {
    return std::exp(p.beta * t - p.mu * softplus(t));
}

double phi_sup_norm(const PhiParams& p) {
    if (!(0.0 <= p.beta && p.beta <= p.mu))
        throw integrability_error("phi_sup_norm: unbounded unless 0 <= beta <= mu");
    if (p.beta == 0.0 || p.beta == p.mu) return 1.0;
    const double b = p.beta, m = p.mu;
    return std::exp(m * std::log((m - b) / m) + b * std::log(b / (m - b)));
}

double phi_lp_norm(const PhiParams& p, double exponent) {
    if (!(0.0 < p.beta && p.beta < p.mu))
        throw integrability_error("phi_lp_norm: requires 0 < beta < mu");
    if (exponent < 1.0) throw std::invalid_argument("phi_lp_norm: exponent must be >= 1");
    return std::pow(special::beta(exponent * p.beta, exponent * (p.mu - p.beta)),
                    1.0 / exponent);
}

Complex phi_fourier(const PhiParams& p, double xi) {
    if (!(0.0 < p.beta && p.beta < p.mu))
        throw integrability_error("phi_fourier: requires 0 < beta < mu");
    return special::beta(Complex(p.beta, -xi), Complex(p.mu - p.beta, xi));
}

PolyCoeffTable phi_derivative_poly(const PhiParams& p, int n) {
    if (n < 0) throw std::invalid_argument("phi_derivative_poly: order must be >= 0");
    std::vector<double> a{1.0};
    for (int k = 0; k < n; ++k) {
        std::vector<double> next(a.size() + 1, 0.0);
        for (size_t m = 0; m < next.size(); ++m) {
            const double am = m < a.size() ? a[m] : 0.0;
            const double am1 = (m >= 1 && m - 1 < a.size()) ? a[m - 1] : 0.0;
            next[m] = (p.beta + double(m)) * am - (p.mu + double(m) - 1.0) * am1;
        }
        a = std::move(next);
    }
    return PolyCoeffTable{n, std::move(a)};
}

double phi_derivative(const PhiParams& p, const PolyCoeffTable& table, double t) {
    const double l = logistic(t);
    double poly = 0.0;
    for (size_t m = table.coeffs.size(); m-- > 0;) poly = poly * l + table.coeffs[m];
    return phi(p, t) * poly;
}

namespace {

struct Rat {
    long long n = 0, d = 1;
};

Rat norm(Rat r) {
    if (r.d < 0) {
        r.n = -r.n;
        r.d = -r.d;
    }
    const long long g = std::gcd(std::abs(r.n), r.d);
    if (g > 1) {
        r.n /= g;
        r.d /= g;
    }
    return r;
}

long long mul_checked(long long a, long long b) {
    long long out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("phi_poly_recursion_exact: rational overflow");
    return out;
}

Rat add(Rat a, Rat b) {
    return norm({mul_checked(a.n, b.d) + mul_checked(b.n, a.d), mul_checked(a.d, b.d)});
}
Rat sub(Rat a, Rat b) { return add(a, {-b.n, b.d}); }
Rat mul(Rat a, Rat b) { return norm({mul_checked(a.n, b.n), mul_checked(a.d, b.d)}); }
Rat rpow(Rat a, int n) {
    Rat out{1, 1};
    for (int i = 0; i < n; ++i) out = mul(out, a);
    return out;
}
bool eq(Rat a, Rat b) { return a.n == b.n && a.d == b.d; }

}  // namespace

bool phi_poly_recursion_exact(long long bn, long long bd, long long mn, long long md, int n) {
    if (n < 0 || n > 10)
        throw std::invalid_argument("phi_poly_recursion_exact: order out of range");
    const Rat beta = norm({bn, bd});
    const Rat mu = norm({mn, md});

    // recursion-built rows a^{(k)}
    std::vector<Rat> a{{1, 1}};
    for (int k = 0; k < n; ++k) {
        std::vector<Rat> next(a.size() + 1, Rat{0, 1});
        for (size_t m = 0; m < next.size(); ++m) {
            const Rat am = m < a.size() ? a[m] : Rat{0, 1};
            const Rat am1 = (m >= 1 && m - 1 < a.size()) ? a[m - 1] : Rat{0, 1};
            next[m] = sub(mul(add(beta, {(long long)m, 1}), am),
                          mul(add(mu, {(long long)m - 1, 1}), am1));
        }
        a = std::move(next);
    }

    // closed form a_m = [prod_{j<m}(mu+j)/m!] sum_j (-1)^j C(m,j) (beta+j)^n
    for (int m = 0; m <= n; ++m) {
        Rat lead{1, 1};
        for (int j = 0; j < m; ++j) {
            lead = mul(lead, add(mu, {j, 1}));
            lead = mul(lead, {1, j + 1});
        }
        Rat sum{0, 1};
        long long binom = 1;
        for (int j = 0; j <= m; ++j) {
            const Rat term = mul({(j % 2 == 0 ? binom : -binom), 1}, rpow(add(beta, {j, 1}), n));
            sum = add(sum, term);
            binom = binom * (m - j) / (j + 1);
        }
        if (!eq(a[size_t(m)], mul(lead, sum))) return false;
    }
    return true;
}

double psi(const PsiParams& p, double t) {
    if (t <= 0.0) return 0.0;
    const double one_minus = -std::expm1(-t);
    return p.gamma * std::exp((p.gamma - 1.0) * std::log(one_minus) - p.nu * t);
}

double psi_sup_norm(const PsiParams& p) {
    if (!(p.gamma >= 1.0 && p.nu >= 0.0))
        throw integrability_error("psi_sup_norm: unbounded unless gamma >= 1 and nu >= 0");
    if (p.gamma == 1.0) return 1.0;
    if (p.nu == 0.0) return p.gamma;
    const double g = p.gamma, v = p.nu;
    return g * std::exp((g - 1.0) * std::log((g - 1.0) / (v + g - 1.0)) +
                        v * std::log(v / (v + g - 1.0)));
}

double psi_lp_norm(const PsiParams& p, double exponent) {
    if (exponent < 1.0) throw std::invalid_argument("psi_lp_norm: exponent must be >= 1");
    const bool integrable =
        p.nu > 0.0 && (p.gamma >= 1.0 || exponent < 1.0 / (1.0 - p.gamma));
    if (!integrable)
        throw integrability_error("psi_lp_norm: requires nu > 0 and gamma >= 1 or p < 1/(1-gamma)");
    return p.gamma *
           std::pow(special::beta(exponent * p.nu, exponent * (p.gamma - 1.0) + 1.0),
                    1.0 / exponent);
}

Complex psi_fourier(const PsiParams& p, double xi) {
    if (!(p.gamma > 0.0 && p.nu > 0.0))
        throw integrability_error("psi_fourier: requires gamma > 0 and nu > 0");
    return p.gamma * special::beta(Complex(p.gamma, 0.0), Complex(p.nu, xi));
}

double phi_conv_phi(const PhiParams& p, const PhiParams& q, double t) {
    if (!(0.0 < p.beta && p.beta < p.mu && 0.0 < q.beta && q.beta < q.mu))
        throw integrability_error("phi_conv_phi: requires 0 < beta < mu on both factors");
    if (t < 0.0) {
        // phi_{b,m}(-t) = phi_{m-b,m}(t) turns the convolution around
        return phi_conv_phi({p.mu - p.beta, p.mu}, {q.mu - q.beta, q.mu}, -t);
    }
    const double b = p.beta, m = p.mu, g = q.beta, v = q.mu;
    return special::beta(m - b + g, v - g + b) * std::exp(-(m - b) * t) *
           special::hyp2f1_one_minus(m, m - b + g, m + v, std::exp(-t));
}

double phi_conv_psi(const PhiParams& p, const PsiParams& q, double t) {
    if (!(p.beta > 0.0 && p.mu > 0.0 && q.gamma > 0.0 && q.nu > 0.0))
        throw integrability_error("phi_conv_psi: requires positive parameters");
    const double b = p.beta, m = p.mu, g = q.gamma, v = q.nu;
    const double arg = logistic(t);
    const double hyp = arg <= 0.7
                           ? special::hyp2f1(m, g, b + g + v, arg)
                           : special::hyp2f1_one_minus(m, g, b + g + v, logistic(-t));
    return g * special::beta(g, b + v) * phi(p, t) * hyp;
}

}  // namespace stieltjes::kernels
