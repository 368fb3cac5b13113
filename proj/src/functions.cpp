#include "stieltjes/functions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace stieltjes {

namespace {

// C^2 ramp: 0 below lo, 1 above hi
double smoothstep(double x, double lo, double hi) {
    if (x <= lo) return 0.0;
    if (x >= hi) return 1.0;
    const double u = (x - lo) / (hi - lo);
    return u * u * u * (10.0 + u * (-15.0 + 6.0 * u));
}

double gamma_ratio(double rho, double alpha) {
    // Gamma(rho+alpha)/Gamma(rho), rho > 0, rho + alpha > 0
    return std::exp(std::lgamma(rho + alpha) - std::lgamma(rho));
}

}  // namespace

namespace catalog {

TestFunction exp_decay(double lambda) {
    if (lambda <= 0.0) throw std::invalid_argument("exp_decay: lambda must be > 0");
    TestFunction f;
    f.id = "exp:" + std::to_string(lambda);
    f.domain = FnDomain::half_line;
    f.decay = DecayClass::schwartz;
    f.eval = [lambda](double t) { return std::exp(-lambda * t); };
    f.deriv = [lambda](int n, double t) {
        return std::pow(-lambda, n) * std::exp(-lambda * t);
    };
    f.weyl_plus = [lambda](double alpha, double t) {
        return std::pow(lambda, alpha) * std::exp(-lambda * t);
    };
    return f;
}

TestFunction recip1p(double rho, double a) {
    if (rho <= 0.0 || a <= 0.0) throw std::invalid_argument("recip1p: rho, a must be > 0");
    TestFunction f;
    f.id = "recip1p:" + std::to_string(rho);
    f.domain = FnDomain::half_line;
    f.decay = DecayClass::rational_decay;
    f.decay_exponent = rho;
    f.eval = [rho, a](double t) { return std::pow(a + t, -rho); };
    f.deriv = [rho, a](int n, double t) {
        return (n % 2 == 0 ? 1.0 : -1.0) * gamma_ratio(rho, n) * std::pow(a + t, -rho - n);
    };
    f.weyl_plus = [rho, a](double alpha, double t) {
        return gamma_ratio(rho, alpha) * std::pow(a + t, -rho - alpha);
    };
    return f;
}

TestFunction h2() {
    TestFunction f = recip1p(2.0, 1.0);
    f.id = "h2";
    return f;
}

TestFunction gauss() {
    TestFunction f;
    f.id = "gauss";
    f.domain = FnDomain::whole_line;
    f.decay = DecayClass::schwartz;
    f.eval = [](double t) { return std::exp(-t * t); };
    f.deriv = [](int n, double t) {
        // (-1)^n H_n(t) e^{-t^2}, physicists' Hermite
        double h0 = 1.0, h1 = 2.0 * t;
        if (n == 0) return std::exp(-t * t);
        for (int k = 1; k < n; ++k) {
            const double h2v = 2.0 * t * h1 - 2.0 * k * h0;
            h0 = h1;
            h1 = h2v;
        }
        return (n % 2 == 0 ? 1.0 : -1.0) * h1 * std::exp(-t * t);
    };
    f.fourier = [](double xi) { return std::sqrt(M_PI) * std::exp(-xi * xi / 4.0); };
    return f;
}

TestFunction plateau(double inner, double outer) {
    if (!(0.0 < inner && 4.0 * inner < outer))
        throw std::invalid_argument("plateau: need 0 < inner << outer");
    TestFunction f;
    std::ostringstream id;
    id << "plateau:" << inner << "," << outer;
    f.id = id.str();
    f.domain = FnDomain::half_line;
    f.decay = DecayClass::compact_support;
    f.support_radius = 2.0 * outer;
    f.eval = [inner, outer](double t) {
        if (t <= inner || t >= 2.0 * outer) return 0.0;
        return smoothstep(t, inner, 2.0 * inner) * (1.0 - smoothstep(t, outer, 2.0 * outer));
    };
    return f;
}

TestFunction bump(double gamma_, double T, double inner) {
    if (T <= 4.0 * inner) throw std::invalid_argument("bump: need T >> inner");
    TestFunction f;
    std::ostringstream id;
    id << "bump:" << gamma_ << "," << T;
    f.id = id.str();
    f.domain = FnDomain::half_line;
    f.decay = DecayClass::compact_support;
    f.support_radius = 2.0 * T;
    f.eval = [gamma_, T, inner](double t) {
        if (t <= inner || t >= 2.0 * T) return 0.0;
        return std::pow(t, gamma_ - 1.0) * smoothstep(t, inner, 2.0 * inner) *
               (1.0 - smoothstep(t, T, 2.0 * T));
    };
    return f;
}

TestFunction parse(const std::string& id) {
    const auto colon = id.find(':');
    const std::string name = id.substr(0, colon);
    std::vector<double> args;
    if (colon != std::string::npos) {
        std::stringstream ss(id.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) args.push_back(std::stod(tok));
    }
    auto want = [&](size_t n) {
        if (args.size() != n)
            throw std::invalid_argument("catalog: '" + name + "' takes " + std::to_string(n) +
                                        " parameter(s)");
    };
    if (name == "exp") {
        want(1);
        return exp_decay(args[0]);
    }
    if (name == "recip1p") {
        want(1);
        return recip1p(args[0]);
    }
    if (name == "h2") {
        want(0);
        return h2();
    }
    if (name == "gauss") {
        want(0);
        return gauss();
    }
    if (name == "plateau") {
        if (args.empty()) return plateau();
        want(2);
        return plateau(args[0], args[1]);
    }
    if (name == "bump") {
        want(2);
        return bump(args[0], args[1]);
    }
    throw std::invalid_argument("catalog: unknown function id '" + id + "'");
}

}  // namespace catalog

TestFunction scaled(const TestFunction& f, double lambda) {
    if (lambda <= 0.0) throw std::invalid_argument("scaled: lambda must be > 0");
    TestFunction g = f;
    g.id = f.id + "@scale" + std::to_string(lambda);
    g.support_radius = f.support_radius / lambda;
    auto base = f;
    g.eval = [base, lambda](double t) { return base.eval(lambda * t); };
    if (f.has_deriv())
        g.deriv = [base, lambda](int n, double t) {
            return std::pow(lambda, n) * base.deriv(n, lambda * t);
        };
    else
        g.deriv = nullptr;
    if (f.has_weyl())
        g.weyl_plus = [base, lambda](double alpha, double t) {
            return std::pow(lambda, alpha) * base.weyl_plus(alpha, lambda * t);
        };
    else
        g.weyl_plus = nullptr;
    g.fourier = nullptr;
    return g;
}

TestFunction dilated(const TestFunction& f, double t, double p) {
    if (p < 1.0) throw std::invalid_argument("dilated: p must be >= 1");
    TestFunction g = scaled(f, std::exp(-t));
    const double amp = std::exp(-t / p);
    g.id = f.id + "@T(" + std::to_string(t) + "," + std::to_string(p) + ")";
    auto base_eval = g.eval;
    g.eval = [base_eval, amp](double s) { return amp * base_eval(s); };
    if (g.has_deriv()) {
        auto base_deriv = g.deriv;
        g.deriv = [base_deriv, amp](int n, double s) { return amp * base_deriv(n, s); };
    }
    if (g.has_weyl()) {
        auto base_weyl = g.weyl_plus;
        g.weyl_plus = [base_weyl, amp](double alpha, double s) {
            return amp * base_weyl(alpha, s);
        };
    }
    return g;
}

TestFunction product(const TestFunction& f, const TestFunction& g) {
    TestFunction h;
    h.id = f.id + "*" + g.id;
    h.domain = f.domain;
    h.support_radius = std::min(f.support_radius, g.support_radius);
    if (f.decay == DecayClass::compact_support || g.decay == DecayClass::compact_support)
        h.decay = DecayClass::compact_support;
    else if (f.decay == DecayClass::schwartz || g.decay == DecayClass::schwartz)
        h.decay = DecayClass::schwartz;
    else {
        h.decay = DecayClass::rational_decay;
        h.decay_exponent = f.decay_exponent + g.decay_exponent;
    }
    auto lf = f, lg = g;
    h.eval = [lf, lg](double t) { return lf.eval(t) * lg.eval(t); };
    if (f.has_deriv() && g.has_deriv()) {
        h.deriv = [lf, lg](int n, double t) {
            double sum = 0.0;
            double binom = 1.0;
            for (int k = 0; k <= n; ++k) {
                const double dfk = k == 0 ? lf.eval(t) : lf.deriv(k, t);
                const double dgn = k == n ? lg.eval(t) : lg.deriv(n - k, t);
                sum += binom * dfk * dgn;
                binom = binom * (n - k) / (k + 1.0);
            }
            return sum;
        };
    }
    return h;
}

TestFunction reflected(const TestFunction& f) {
    if (f.domain != FnDomain::whole_line)
        throw std::invalid_argument("reflected: needs a whole-line function");
    TestFunction g = f;
    g.id = "~" + f.id;
    auto base = f;
    g.eval = [base](double t) { return base.eval(-t); };
    if (f.has_deriv())
        g.deriv = [base](int n, double t) {
            return (n % 2 == 0 ? 1.0 : -1.0) * base.deriv(n, -t);
        };
    else
        g.deriv = nullptr;
    g.weyl_plus = nullptr;
    g.fourier = nullptr;
    return g;
}

}  // namespace stieltjes
