#include "stieltjes/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace stieltjes::quad {

namespace {

// 15-point Kronrod / 7-point Gauss pair (positive half; index 7 is the center).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the embedded rule (nodes kXgk[1], kXgk[3], kXgk[5], center).
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Panel {
    double a, b;
    T value{};
    double err = 0.0;
    bool operator<(const Panel& o) const { return err < o.err; }
};

template <class T, class F>
Panel<T> gk15(const F& f, double a, double b, bool& finite_ok) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const T fc = f(c);
    T resk = kWgk[7] * fc;
    T resg = kWg[3] * fc;
    double resabs = kWgk[7] * std::abs(fc);
    T fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        fv1[j] = f(c - h * kXgk[j]);
        fv2[j] = f(c + h * kXgk[j]);
        resk += kWgk[j] * (fv1[j] + fv2[j]);
        resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
        if (j % 2 == 1) resg += kWg[j / 2] * (fv1[j] + fv2[j]);
    }
    const T reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));
    resasc *= std::abs(h);
    resabs *= std::abs(h);

    Panel<T> p;
    p.a = a;
    p.b = b;
    p.value = resk * h;
    double err = std::abs(resk - resg) * std::abs(h);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / eps50)
        err = std::max(err, eps50 * resabs);
    p.err = err;
    finite_ok = finite_ok && std::isfinite(std::abs(p.value)) && std::isfinite(err);
    return p;
}

template <class T>
struct AdaptOut {
    T value{};
    double err = 0.0;
    long evals = 0;
    bool converged = false;
};

template <class T, class F>
AdaptOut<T> adapt(const F& f, double a, double b, const Config& cfg, int seed_panels);

// Integrate a panel that keeps shrinking against a domain endpoint by
// slicing geometrically toward it and Aitken-extrapolating the partial
// sums. Handles the u^p (p > -1) behaviour an integrable endpoint
// singularity leaves after the domain maps. Slices are themselves adaptive
// so a feature falling inside one still gets resolved.
template <class T, class F>
Panel<T> endpoint_chain(const F& f, double a, double b, const Config& cfg, bool& finite_ok,
                        bool toward_left, long& evals) {
    T partial{};
    double rule_err = 0.0;
    T extrap{};
    T prev_extrap{};
    double extrap_err = std::numeric_limits<double>::infinity();
    T s0{}, s1{}, s2{};
    int have = 0;
    const int levels = 52;
    Config slice_cfg = cfg;
    // strictly shrinking budget: a nested chain cannot recurse forever
    slice_cfg.max_evals = std::max(100L, std::min(4000L, cfg.max_evals / 2));
    for (int j = 0; j < levels; ++j) {
        const double w = std::ldexp(std::abs(b - a), -(j + 1));  // width/2^{j+1}
        double pa, pb;
        if (toward_left) {
            pa = a + w;
            pb = a + 2.0 * w;
            if (j == 0) pb = b;
        } else {
            pb = b - w;
            pa = b - 2.0 * w;
            if (j == 0) pa = a;
        }
        AdaptOut<T> sq = adapt<T>(f, pa, pb, slice_cfg, 1);
        Panel<T> q;
        q.a = pa;
        q.b = pb;
        q.value = sq.value;
        q.err = sq.err;
        finite_ok = finite_ok && std::isfinite(std::abs(sq.value));
        evals += sq.evals;
        partial += q.value;
        rule_err += q.err;
        s0 = s1;
        s1 = s2;
        s2 = partial;
        ++have;
        // a negligible slice means the contributions have effectively
        // terminated: the partial sum is the answer, not the geometric
        // continuation the Aitken model would extrapolate to
        if (have >= 2 && std::abs(q.value) <= 1e-17 * std::abs(partial)) {
            Panel<T> out;
            out.a = a;
            out.b = b;
            out.value = partial;
            out.err = rule_err + 2.0 * std::abs(q.value);
            return out;
        }
        if (have >= 3) {
            const T d1 = s2 - s1, d0 = s1 - s0;
            const T den = d1 - d0;
            prev_extrap = extrap;
            extrap = std::abs(den) > 0.0 ? s2 - d1 * d1 / den : s2;
            if (have >= 4) extrap_err = std::abs(extrap - prev_extrap);
            if (extrap_err <= 1e-16 * std::abs(extrap) + 1e-300) break;
        }
    }
    Panel<T> out;
    out.a = a;
    out.b = b;
    out.value = have >= 3 ? extrap : partial;
    out.err = rule_err + (have >= 4 ? extrap_err : std::abs(s2 - s1));
    return out;
}

// Bisection-adaptive driver over [a,b]; worst panel first. Panels pinched
// against a domain endpoint are finished off by chain extrapolation;
// otherwise unrefinable panels are frozen and the rest keeps refining.
template <class T, class F>
AdaptOut<T> adapt(const F& f, double a, double b, const Config& cfg, int seed_panels) {
    AdaptOut<T> out;
    if (a == b) {
        out.converged = true;
        return out;
    }
    bool finite_ok = true;
    std::priority_queue<Panel<T>> panels;
    T total{};
    double total_err = 0.0;
    T frozen_value{};
    double frozen_err = 0.0;
    seed_panels = std::max(1, seed_panels);
    for (int i = 0; i < seed_panels; ++i) {
        const double pa = a + (b - a) * i / seed_panels;
        const double pb = a + (b - a) * (i + 1) / seed_panels;
        Panel<T> p = gk15<T>(f, pa, pb, finite_ok);
        total += p.value;
        total_err += p.err;
        panels.push(p);
        out.evals += 15;
    }
    const double span = std::abs(b - a);
    const double chain_width = span * 1e-4 / seed_panels;
    const double min_width = span * 1e-14;
    while (finite_ok && !panels.empty()) {
        const double target =
            std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total + frozen_value));
        if (total_err + frozen_err <= target) break;
        if (out.evals + 30 > cfg.max_evals) break;
        Panel<T> worst = panels.top();
        if (worst.err <= target / (panels.size() + 1)) break;
        panels.pop();
        total -= worst.value;
        total_err -= worst.err;
        const double width = std::abs(worst.b - worst.a);
        const bool at_left = worst.a == a, at_right = worst.b == b;
        if ((at_left || at_right) && width < chain_width) {
            Panel<T> done =
                endpoint_chain<T>(f, worst.a, worst.b, cfg, finite_ok, at_left, out.evals);
            frozen_value += done.value;
            frozen_err += done.err;
            continue;
        }
        if (width < min_width) {  // interior panel that cannot be resolved further
            frozen_value += worst.value;
            frozen_err += worst.err;
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Panel<T> left = gk15<T>(f, worst.a, mid, finite_ok);
        Panel<T> right = gk15<T>(f, mid, worst.b, finite_ok);
        out.evals += 30;
        total += left.value + right.value;
        total_err += left.err + right.err;
        panels.push(left);
        panels.push(right);
    }
    out.value = total + frozen_value;
    out.err = total_err + frozen_err;
    out.converged = finite_ok && out.err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
    return out;
}

template <class T>
struct Traits;
template <>
struct Traits<double> {
    using result = Result;
};
template <>
struct Traits<std::complex<double>> {
    using result = ComplexResult;
};

template <class T>
typename Traits<T>::result pack(const AdaptOut<T>& a) {
    typename Traits<T>::result r;
    r.value = a.value;
    r.err_estimate = a.err;
    r.evals = a.evals;
    r.converged = a.converged;
    return r;
}

template <class T, class F>
typename Traits<T>::result do_interval(const F& f, double a, double b, const Config& cfg) {
    cfg.validate();
    return pack(adapt<T>(f, a, b, cfg, 8));
}

// [a, inf) via t = a + u/(1-u), u in [0,1)
template <class T, class F>
typename Traits<T>::result do_halfline(const F& f, double a, const Config& cfg) {
    cfg.validate();
    auto g = [&f, a](double u) -> T {
        const double om = 1.0 - u;
        return f(a + u / om) / (om * om);
    };
    return pack(adapt<T>(g, 0.0, 1.0, cfg, 31));
}

// (-inf, inf) via t = u/(1-u^2), u in (-1,1)
template <class T, class F>
typename Traits<T>::result do_wholeline(const F& f, const Config& cfg) {
    cfg.validate();
    auto g = [&f](double u) -> T {
        const double d = 1.0 - u * u;
        return f(u / d) * ((1.0 + u * u) / (d * d));
    };
    return pack(adapt<T>(g, -1.0, 1.0, cfg, 63));
}

}  // namespace

void Config::validate() const {
    if (abs_tol <= 0 || rel_tol <= 0) throw std::invalid_argument("quad: tolerances must be > 0");
    if (max_evals < 100) throw std::invalid_argument("quad: max_evals must be >= 100");
    for (size_t i = 1; i < pv_epsilons.size(); ++i)
        if (pv_epsilons[i] >= pv_epsilons[i - 1] || pv_epsilons[i] <= 0)
            throw std::invalid_argument("quad: pv_epsilons must decrease strictly toward 0");
}

Result integrate_real(const RealFn& f, Interval d, const Config& cfg) {
    return do_interval<double>(f, d.a, d.b, cfg);
}
Result integrate_real(const RealFn& f, HalfLine d, const Config& cfg) {
    return do_halfline<double>(f, d.a, cfg);
}
Result integrate_real(const RealFn& f, WholeLine, const Config& cfg) {
    return do_wholeline<double>(f, cfg);
}
ComplexResult integrate_complex(const ComplexFn& f, Interval d, const Config& cfg) {
    return do_interval<std::complex<double>>(f, d.a, d.b, cfg);
}
ComplexResult integrate_complex(const ComplexFn& f, HalfLine d, const Config& cfg) {
    return do_halfline<std::complex<double>>(f, d.a, cfg);
}
ComplexResult integrate_complex(const ComplexFn& f, WholeLine, const Config& cfg) {
    return do_wholeline<std::complex<double>>(f, cfg);
}

Result integrate_power_left(const RealFn& f, double a, double b, double p, const Config& cfg) {
    if (p <= -1.0) throw integrability_error("integrate_power_left: exponent must be > -1");
    if (b <= a) return Result{0.0, 0.0, 0, true};
    const double q = p + 1.0;
    auto g = [&](double w) { return f(a + std::pow(w, 1.0 / q)); };
    Result r = do_interval<double>(g, 0.0, std::pow(b - a, q), cfg);
    r.value /= q;
    r.err_estimate /= q;
    return r;
}

Result integrate_power_right(const RealFn& f, double a, double b, double p, const Config& cfg) {
    if (p <= -1.0) throw integrability_error("integrate_power_right: exponent must be > -1");
    if (b <= a) return Result{0.0, 0.0, 0, true};
    const double q = p + 1.0;
    auto g = [&](double w) { return f(b - std::pow(w, 1.0 / q)); };
    Result r = do_interval<double>(g, 0.0, std::pow(b - a, q), cfg);
    r.value /= q;
    r.err_estimate /= q;
    return r;
}

Result integrate_power_halfline(const RealFn& f, double p, const Config& cfg) {
    if (p <= -1.0) throw integrability_error("integrate_power_halfline: exponent must be > -1");
    Result head;
    if (p < 0.0) {
        head = integrate_power_left(f, 0.0, 1.0, p, cfg);
    } else {
        head = do_interval<double>([&](double u) { return std::pow(u, p) * f(u); }, 0.0, 1.0,
                                   cfg);
    }
    Result tail = do_halfline<double>([&](double u) { return std::pow(u, p) * f(u); }, 1.0, cfg);
    return Result{head.value + tail.value, head.err_estimate + tail.err_estimate,
                  head.evals + tail.evals, head.converged && tail.converged};
}

namespace {

// Excised Cauchy integral J(eps) = int_{D \ (c-eps,c+eps)} f(s)/(c-s) ds,
// then Neville extrapolation of (eps_i, J_i) to eps = 0.
struct PvPieces {
    double lo;         // left end of domain (or c - R for whole line)
    bool lo_finite;    // false: left piece extends to -inf
    double hi;         // right end
    bool hi_finite;    // false: right piece extends to +inf
};

Result pv_engine(const RealFn& f, double c, const PvPieces& d, const Config& cfg) {
    cfg.validate();
    auto g = [&](double s) { return f(s) / (c - s); };
    // keep the excision inside the domain when c sits near a boundary, and
    // above the ULP of c when c is large
    double eps_scale = 1.0;
    if (d.lo_finite) eps_scale = std::min(eps_scale, 0.45 * (c - d.lo) / cfg.pv_epsilons[0]);
    if (d.hi_finite) eps_scale = std::min(eps_scale, 0.45 * (d.hi - c) / cfg.pv_epsilons[0]);
    const double ulp_floor =
        64.0 * std::numeric_limits<double>::epsilon() * std::abs(c) / cfg.pv_epsilons.back();
    eps_scale = std::max(eps_scale, ulp_floor);
    std::vector<double> epsilons = cfg.pv_epsilons;
    for (auto& e : epsilons) e *= eps_scale;
    // layer widths: the 1/(c-s) boundary layer at the excision edge is
    // integrated in the log variable s = c -+ eps e^v, which removes it
    const double far_l = d.lo_finite ? 0.5 * (c - d.lo) : std::max(1.0, std::abs(c));
    const double far_r = d.hi_finite ? 0.5 * (d.hi - c) : std::max(1.0, std::abs(c));

    double far_err = 0.0;
    double layer_err = 0.0;  // worst over the epsilon runs
    double layer_err_cur = 0.0;
    long evals = 0;
    bool ok = true;
    // pieces run mostly toward an absolute target so the assembled value can
    // certify the caller's tolerance even when the pieces cancel
    quad::Config piece_cfg = cfg;
    piece_cfg.abs_tol = cfg.abs_tol / 16.0;
    piece_cfg.rel_tol = std::max(cfg.rel_tol / 1000.0, 1e-15);
    const quad::Config& cfg_pieces = piece_cfg;
    auto accumulate = [&](const Result& r, double& j) {
        j += r.value;
        layer_err_cur += r.err_estimate;
        evals += r.evals;
        ok = ok && r.converged;
    };

    // [a, b] with many decades between the integrand's own scale and b:
    // substitute u = a + (b-a) e^{-y} so no structure hides between nodes
    auto wide_interval = [&](double a, double b) {
        const double W = b - a;
        Result out;
        if (W <= 100.0 * std::max(1.0, std::abs(a)))
            return do_interval<double>(g, a, b, cfg_pieces);
        const double Y = 45.0;
        auto gy = [&](double y) {
            const double w = W * std::exp(-y);
            return g(a + w) * w;
        };
        Result main = pack(adapt<double>(gy, 0.0, Y, cfg_pieces, 16));
        Result stub = do_interval<double>(g, a, a + W * std::exp(-Y), cfg_pieces);
        return Result{main.value + stub.value, main.err_estimate + stub.err_estimate,
                      main.evals + stub.evals, main.converged && stub.converged};
    };

    // eps-independent far pieces
    double far = 0.0;
    layer_err_cur = 0.0;
    if (d.lo_finite) {
        if (c - far_l > d.lo) accumulate(wide_interval(d.lo, c - far_l), far);
    } else {
        accumulate(do_halfline<double>([&](double s) { return g(-s); }, -(c - far_l),
                                       cfg_pieces),
                   far);
    }
    if (d.hi_finite) {
        if (c + far_r < d.hi)
            accumulate(do_interval<double>(g, c + far_r, d.hi, cfg_pieces), far);
    } else {
        accumulate(do_halfline<double>(g, c + far_r, cfg_pieces), far);
    }

    far_err = layer_err_cur;

    std::vector<double> js;
    for (double eps : epsilons) {
        double j = far;
        layer_err_cur = 0.0;
        if (eps < far_l) {
            accumulate(do_interval<double>(
                           [&](double v) { return f(c - eps * std::exp(v)); }, 0.0,
                           std::log(far_l / eps), cfg_pieces),
                       j);
        }
        if (eps < far_r) {
            accumulate(do_interval<double>(
                           [&](double v) { return -f(c + eps * std::exp(v)); }, 0.0,
                           std::log(far_r / eps), cfg_pieces),
                       j);
        }
        js.push_back(j);
        layer_err = std::max(layer_err, layer_err_cur);
    }
    // Neville table in eps, evaluated at 0
    const size_t n = js.size();
    std::vector<double> p = js;
    double prev = p[0];
    for (size_t k = 1; k < n; ++k) {
        for (size_t i = 0; i + k < n; ++i) {
            const double e0 = epsilons[i];
            const double e1 = epsilons[i + k];
            p[i] = (e0 * p[i + 1] - e1 * p[i]) / (e0 - e1);
        }
        if (k == n - 2) prev = p[0];
    }
    Result out;
    out.value = p[0];
    // the extrapolation mixes the J(eps) with O(1) weights, so the shared far
    // error enters once and the per-eps layer error at most ~1.5x
    out.err_estimate = (n >= 2 ? std::abs(p[0] - prev) : 0.0) + far_err + 1.5 * layer_err;
    out.evals = evals;
    out.converged =
        ok && out.err_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
    return out;
}

}  // namespace

Result principal_value(const RealFn& f, double c, Interval d, const Config& cfg) {
    if (c <= d.a || c >= d.b)
        throw std::invalid_argument("principal_value: singularity must be interior");
    return pv_engine(f, c, PvPieces{d.a, true, d.b, true}, cfg);
}
Result principal_value(const RealFn& f, double c, HalfLine d, const Config& cfg) {
    if (c <= d.a) throw std::invalid_argument("principal_value: singularity must be interior");
    return pv_engine(f, c, PvPieces{d.a, true, 0.0, false}, cfg);
}
Result principal_value(const RealFn& f, double c, WholeLine, const Config& cfg) {
    return pv_engine(f, c, PvPieces{0.0, false, 0.0, false}, cfg);
}

namespace {

// Euler-transformed sum of (near-)alternating half-period contributions.
class EulerSum {
public:
    void add(std::complex<double> term) {
        if (wksp_.empty()) {
            wksp_.push_back(term);
            sum_ = 0.5 * term;
            return;
        }
        std::complex<double> tmp = wksp_[0];
        wksp_[0] = term;
        for (size_t j = 1; j < wksp_.size(); ++j) {
            std::complex<double> dum = wksp_[j];
            wksp_[j] = 0.5 * (wksp_[j - 1] + tmp);
            tmp = dum;
        }
        const std::complex<double> next = 0.5 * (wksp_.back() + tmp);
        if (std::abs(next) <= std::abs(wksp_.back())) {
            wksp_.push_back(next);
            sum_ += 0.5 * next;
            last_inc_ = std::abs(0.5 * next);
        } else {
            sum_ += next;
            last_inc_ = std::abs(next);
        }
    }
    std::complex<double> sum() const { return sum_; }
    double last_increment() const { return last_inc_; }

private:
    std::vector<std::complex<double>> wksp_;
    std::complex<double> sum_{0.0, 0.0};
    double last_inc_ = std::numeric_limits<double>::infinity();
};

// tail int_{r0}^{inf} f(x) e^{-i xi x} dx, xi != 0
ComplexResult fourier_tail(const RealFn& f, double xi, double r0, const Config& cfg) {
    const double h = M_PI / std::abs(xi);
    EulerSum acc;
    ComplexResult out;
    bool finite_ok = true;
    double err = 0.0;
    const int kmax = 1024;
    for (int k = 0; k < kmax; ++k) {
        auto g = [&](double x) {
            return f(x) * std::exp(std::complex<double>(0.0, -xi * x));
        };
        Panel<std::complex<double>> p =
            gk15<std::complex<double>>(g, r0 + k * h, r0 + (k + 1) * h, finite_ok);
        out.evals += 15;
        err += p.err;
        acc.add(p.value);
        if (k >= 4 && acc.last_increment() < 0.1 * cfg.abs_tol) {
            out.converged = true;
            break;
        }
        if (out.evals > cfg.max_evals) break;
    }
    out.value = acc.sum();
    out.err_estimate = err + acc.last_increment();
    out.converged = out.converged && finite_ok;
    return out;
}

ComplexResult fourier_halfline_impl(const RealFn& f, double xi, double a, const Config& cfg) {
    if (xi == 0.0) {
        Result r = do_halfline<double>(f, a, cfg);
        return ComplexResult{{r.value, 0.0}, r.err_estimate, r.evals, r.converged};
    }
    const double h = M_PI / std::abs(xi);
    const double rc = a + std::min(cfg.truncation_radius, std::max(48.0, 8.0 * h));
    auto g = [&](double x) { return f(x) * std::exp(std::complex<double>(0.0, -xi * x)); };
    const int seeds = std::max(8, std::min(4096, int((rc - a) / h) + 1));
    Config core_cfg = cfg;  // headroom for the core + tail assembly
    core_cfg.abs_tol = cfg.abs_tol / 4.0;
    core_cfg.rel_tol = cfg.rel_tol / 4.0;
    ComplexResult core = pack(adapt<std::complex<double>>(g, a, rc, core_cfg, seeds));
    ComplexResult tail = fourier_tail(f, xi, rc, cfg);
    ComplexResult out{core.value + tail.value, core.err_estimate + tail.err_estimate,
                      core.evals + tail.evals, core.converged && tail.converged};
    out.converged = out.converged && out.err_estimate <=
                                         std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
    return out;
}

}  // namespace

ComplexResult fourier(const RealFn& f, double xi, Interval d, const Config& cfg) {
    cfg.validate();
    auto g = [&](double x) { return f(x) * std::exp(std::complex<double>(0.0, -xi * x)); };
    const double h = xi == 0.0 ? (d.b - d.a) : M_PI / std::abs(xi);
    const int seeds = std::max(8, std::min(4096, int((d.b - d.a) / h) + 1));
    return pack(adapt<std::complex<double>>(g, d.a, d.b, cfg, seeds));
}

ComplexResult fourier(const RealFn& f, double xi, HalfLine d, const Config& cfg) {
    cfg.validate();
    return fourier_halfline_impl(f, xi, d.a, cfg);
}

ComplexResult fourier(const RealFn& f, double xi, WholeLine, const Config& cfg) {
    cfg.validate();
    ComplexResult pos = fourier_halfline_impl(f, xi, 0.0, cfg);
    ComplexResult neg =
        fourier_halfline_impl([&f](double x) { return f(-x); }, -xi, 0.0, cfg);
    return ComplexResult{pos.value + neg.value, pos.err_estimate + neg.err_estimate,
                         pos.evals + neg.evals, pos.converged && neg.converged};
}

}  // namespace stieltjes::quad
