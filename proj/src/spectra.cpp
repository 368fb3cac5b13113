#include "stieltjes/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "stieltjes/special.hpp"

namespace stieltjes::spectra {

namespace {

template <class PointFn>
SpectrumCurve sample(double gamma, double mu, double xi_max, int n, const PointFn& at) {
    if (xi_max <= 0.0 || n < 3) throw std::domain_error("curve_sample: need xi_max > 0, n >= 3");
    SpectrumCurve c;
    c.gamma = gamma;
    c.mu = mu;
    c.xi.resize(size_t(n));
    c.points.resize(size_t(n));
    // odd grid keeps xi = 0 as a sample; mirror the negative half by
    // conjugation so the OX symmetry is exact
    const int half = n / 2;
    const bool has_center = n % 2 == 1;
    const int m = has_center ? half : half;  // positive samples
    for (int j = 0; j < n; ++j) c.xi[size_t(j)] = -xi_max + 2.0 * xi_max * j / (n - 1);
    if (has_center) c.xi[size_t(half)] = 0.0;
    for (int j = 0; j < m; ++j) {
        const double xi = c.xi[size_t(n - 1 - j)];
        const Complex v = at(xi);
        c.points[size_t(n - 1 - j)] = v;
        c.points[size_t(j)] = std::conj(v);
        c.xi[size_t(j)] = -xi;
    }
    if (has_center) c.points[size_t(half)] = at(0.0);

    const double apex = std::abs(at(0.0));
    const double edge = std::abs(c.points.back());
    c.decay_warning = !(edge < 1e-3 * apex);
    return c;
}

}  // namespace

SpectrumCurve curve_sample(double gamma, double mu, double xi_max, int n) {
    if (!(0.0 < gamma && gamma < mu))
        throw std::domain_error("curve_sample: requires 0 < gamma < mu");
    return sample(gamma, mu, xi_max, n, [&](double xi) {
        return special::beta(Complex(gamma, xi), Complex(mu - gamma, -xi));
    });
}

SpectrumCurve cesaro_spectrum_sample(double gamma, double p, double xi_max, int n) {
    if (!(gamma > 0.0 && p > 1.0))
        throw std::domain_error("cesaro_spectrum_sample: requires gamma > 0 and p > 1");
    auto c = sample(gamma, gamma + 1.0 - 1.0 / p, xi_max, n, [&](double xi) {
        return gamma * special::beta(Complex(gamma, 0.0), Complex(1.0 - 1.0 / p, xi));
    });
    return c;
}

CurvePredicates curve_predicates(const SpectrumCurve& c) {
    CurvePredicates out;
    const size_t n = c.points.size();
    const size_t center = n / 2;
    out.apex = c.points[center];
    out.enclosing_radius = special::beta(c.gamma, c.mu - c.gamma);

    double max_im = 0.0;
    bool all_right = true;
    for (const auto& z : c.points) {
        max_im = std::max(max_im, std::abs(z.imag()));
        if (z.real() <= 0.0) all_right = false;
    }
    const double apex_scale = std::abs(out.apex);
    out.real_interval = max_im < 1e-9 * apex_scale;
    out.upper_halfplane = all_right;

    // crossings on the positive-xi half (the mirror half repeats them):
    // sign changes of Im refined by bisection, plus near-zero |Im| minima
    // (tangential, multiplicity-two cuts)
    auto point_at = [&](double xi) {
        return special::beta(Complex(c.gamma, xi), Complex(c.mu - c.gamma, -xi));
    };
    std::vector<double> crossings;
    if (!out.real_interval) {
        crossings.push_back(out.apex.real());  // xi = 0 is always a cut
        for (size_t j = center; j + 1 < n; ++j) {
            const double i0 = c.points[j].imag(), i1 = c.points[j + 1].imag();
            if (i0 == 0.0 && j != center) {
                crossings.push_back(c.points[j].real());
            } else if (i0 * i1 < 0.0) {
                double lo = c.xi[j], hi = c.xi[j + 1];
                double flo = i0;
                for (int it = 0; it < 200; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = point_at(mid).imag();
                    if (std::abs(fm) < 1e-10 * apex_scale || hi - lo < 1e-12) {
                        lo = hi = mid;
                        break;
                    }
                    if (flo * fm <= 0.0)
                        hi = mid;
                    else {
                        lo = mid;
                        flo = fm;
                    }
                }
                crossings.push_back(point_at(0.5 * (lo + hi)).real());
            } else if (j > center && j + 1 < n) {
                // interior |Im| minimum without sign change
                const double prev = std::abs(c.points[j - 1].imag());
                const double cur = std::abs(i0);
                const double next = std::abs(i1);
                if (cur < prev && cur < next && cur < 1e-9 * apex_scale)
                    crossings.push_back(c.points[j].real());
            }
        }
        std::sort(crossings.begin(), crossings.end());
        crossings.erase(std::unique(crossings.begin(), crossings.end(),
                                    [&](double a, double b) {
                                        return std::abs(a - b) <=
                                               1e-9 * std::max(1.0, apex_scale);
                                    }),
                        crossings.end());
    }
    out.real_axis_crossings = std::move(crossings);
    return out;
}

RealInterval self_adjoint_interval(double beta, double p) {
    if (!(p > 1.0) || !(beta > 1.0 / p))
        throw std::domain_error("self_adjoint_interval: requires p > 1 and beta > 1/p");
    return RealInterval{0.0, special::beta(beta - 1.0 / p, beta - 1.0 / p)};
}

}  // namespace stieltjes::spectra
