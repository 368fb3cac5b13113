#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stieltjes/fractional.hpp"
#include "stieltjes/functions.hpp"
#include "stieltjes/kernels.hpp"
#include "stieltjes/operators.hpp"
#include "stieltjes/quad.hpp"
#include "stieltjes/special.hpp"
#include "stieltjes/spectra.hpp"
#include "stieltjes/verify.hpp"

namespace py = pybind11;
using namespace stieltjes;
using special::Complex;

namespace {

quad::Config make_config(double abs_tol, double rel_tol, long max_evals,
                         double truncation_radius, std::vector<double> pv_epsilons) {
    quad::Config cfg;
    cfg.abs_tol = abs_tol;
    cfg.rel_tol = rel_tol;
    cfg.max_evals = max_evals;
    cfg.truncation_radius = truncation_radius;
    cfg.pv_epsilons = std::move(pv_epsilons);
    cfg.validate();
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "generalized Stieltjes / Cesaro operator toolkit";

    py::register_exception<pole_error>(m, "PoleError", PyExc_ValueError);
    py::register_exception<cut_error>(m, "CutError", PyExc_ValueError);
    py::register_exception<integrability_error>(m, "IntegrabilityError", PyExc_ValueError);
    py::register_exception<unbounded_operator_error>(m, "UnboundedOperatorError",
                                                     PyExc_ValueError);
    py::register_exception<convergence_error>(m, "ConvergenceError", PyExc_RuntimeError);

    py::class_<quad::Config>(m, "QuadratureConfig")
        .def(py::init(&make_config), py::arg("abs_tol") = 1e-10, py::arg("rel_tol") = 1e-8,
             py::arg("max_evals") = 200000, py::arg("truncation_radius") = 200.0,
             py::arg("pv_epsilons") = std::vector<double>{1e-2, 1e-3, 1e-4})
        .def_readwrite("abs_tol", &quad::Config::abs_tol)
        .def_readwrite("rel_tol", &quad::Config::rel_tol)
        .def_readwrite("max_evals", &quad::Config::max_evals)
        .def_readwrite("truncation_radius", &quad::Config::truncation_radius)
        .def_readwrite("pv_epsilons", &quad::Config::pv_epsilons);

    py::class_<TestFunction>(m, "TestFunction")
        .def_readonly("id", &TestFunction::id)
        .def("__call__", [](const TestFunction& f, double t) { return f.eval(t); })
        .def("__repr__",
             [](const TestFunction& f) { return "<TestFunction " + f.id + ">"; });
    m.def("function", &catalog::parse, py::arg("id"),
          "catalog entry by id, e.g. 'exp:1', 'recip1p:2', 'h2', 'gauss', "
          "'plateau', 'bump:1.5,100'");

    // special functions
    m.def("gamma", [](Complex z) { return special::gamma(z); }, py::arg("z"));
    m.def("log_gamma", &special::log_gamma, py::arg("z"));
    m.def("beta", [](Complex z, Complex w) { return special::beta(z, w); }, py::arg("z"),
          py::arg("w"));
    m.def("digamma", &special::digamma, py::arg("x"));
    m.def("hyp2f1",
          [](Complex a, Complex b, Complex c, Complex z) {
              return special::hyp2f1(a, b, c, z);
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("z"));

    // kernel families
    m.def("phi",
          [](double beta, double mu, double t) { return kernels::phi({beta, mu}, t); });
    m.def("phi_sup_norm",
          [](double beta, double mu) { return kernels::phi_sup_norm({beta, mu}); });
    m.def("phi_lp_norm", [](double beta, double mu, double p) {
        return kernels::phi_lp_norm({beta, mu}, p);
    });
    m.def("phi_fourier", [](double beta, double mu, double xi) {
        return kernels::phi_fourier({beta, mu}, xi);
    });
    m.def("psi",
          [](double gamma, double nu, double t) { return kernels::psi({gamma, nu}, t); });
    m.def("psi_sup_norm",
          [](double gamma, double nu) { return kernels::psi_sup_norm({gamma, nu}); });
    m.def("psi_lp_norm", [](double gamma, double nu, double p) {
        return kernels::psi_lp_norm({gamma, nu}, p);
    });
    m.def("psi_fourier", [](double gamma, double nu, double xi) {
        return kernels::psi_fourier({gamma, nu}, xi);
    });
    m.def("phi_conv_phi", [](double b1, double m1, double b2, double m2, double t) {
        return kernels::phi_conv_phi({b1, m1}, {b2, m2}, t);
    });
    m.def("phi_conv_psi", [](double b, double mu, double g, double nu, double t) {
        return kernels::phi_conv_psi({b, mu}, {g, nu}, t);
    });

    // transforms
    m.def("stieltjes_apply",
          [](double beta, double mu, double p, const TestFunction& f, double t,
             const quad::Config& cfg) {
              return ops::stieltjes_apply({beta, mu, p}, f, t, cfg);
          },
          py::arg("beta"), py::arg("mu"), py::arg("p"), py::arg("f"), py::arg("t"),
          py::arg("config") = quad::Config{});
    m.def("stieltjes_subordinated",
          [](double beta, double mu, double p, const TestFunction& f, double t,
             const quad::Config& cfg) {
              return ops::stieltjes_subordinated({beta, mu, p}, f, t, cfg);
          },
          py::arg("beta"), py::arg("mu"), py::arg("p"), py::arg("f"), py::arg("t"),
          py::arg("config") = quad::Config{});
    m.def("stieltjes_norm", [](double beta, double mu, double p) {
        return ops::stieltjes_norm({beta, mu, p});
    });
    m.def("adjoint_params", [](double beta, double mu, double p) {
        auto a = ops::adjoint_params({beta, mu, p});
        return py::make_tuple(a.beta, a.mu, a.p);
    });
    m.def("cesaro_apply",
          [](double gamma, double p, const TestFunction& f, double t,
             const quad::Config& cfg) { return ops::cesaro_apply({gamma, p}, f, t, cfg); },
          py::arg("gamma"), py::arg("p"), py::arg("f"), py::arg("t"),
          py::arg("config") = quad::Config{});
    m.def("cesaro_norm",
          [](double gamma, double p) { return ops::cesaro_norm({gamma, p}); });
    m.def("hilbert_norm", &ops::hilbert_norm, py::arg("p"));
    m.def("hilbert_plus",
          [](const TestFunction& f, double t, const quad::Config& cfg) {
              return ops::hilbert_plus(f, t, cfg);
          },
          py::arg("f"), py::arg("t"), py::arg("config") = quad::Config{});
    m.def("hilbert_line",
          [](const TestFunction& f, double t, const quad::Config& cfg) {
              return ops::hilbert_line(f, t, cfg);
          },
          py::arg("f"), py::arg("t"), py::arg("config") = quad::Config{});
    m.def("stieltjes_line_apply",
          [](double beta, double mu, double p, const TestFunction& f, double t,
             const quad::Config& cfg) {
              return ops::stieltjes_line_apply({beta, mu, p}, f, t, cfg);
          },
          py::arg("beta"), py::arg("mu"), py::arg("p"), py::arg("f"), py::arg("t"),
          py::arg("config") = quad::Config{});
    m.def("compose_stieltjes",
          [](double b1, double m1, double b2, double m2, double p, const TestFunction& f,
             double t, const quad::Config& cfg) {
              return ops::compose_stieltjes({b1, m1, p}, {b2, m2, p}, f, t, cfg);
          },
          py::arg("beta1"), py::arg("mu1"), py::arg("beta2"), py::arg("mu2"), py::arg("p"),
          py::arg("f"), py::arg("t"), py::arg("config") = quad::Config{});
    m.def("stieltjes_of_otimes",
          [](int n, int mm, const TestFunction& f, const TestFunction& g, double t, double r,
             const quad::Config& cfg) {
              auto rep = ops::stieltjes_of_otimes(n, mm, f, g, t, r, cfg);
              py::dict out;
              out["lhs"] = rep.lhs;
              out["rhs"] = rep.rhs;
              out["rhs_alt"] = rep.rhs_alt;
              out["abs_err"] = rep.abs_err;
              return out;
          },
          py::arg("n"), py::arg("m"), py::arg("f"), py::arg("g"), py::arg("t"),
          py::arg("r") = 1.0, py::arg("config") = quad::Config{});

    // fractional calculus
    m.def("weyl_integral",
          [](const TestFunction& f, double alpha, double t, const quad::Config& cfg) {
              return fractional::weyl_integral(f, alpha, t, cfg);
          },
          py::arg("f"), py::arg("alpha"), py::arg("t"), py::arg("config") = quad::Config{});
    m.def("weyl_derivative",
          [](const TestFunction& f, double alpha, double t, const quad::Config& cfg) {
              return fractional::weyl_derivative(f, alpha, t, cfg);
          },
          py::arg("f"), py::arg("alpha"), py::arg("t"), py::arg("config") = quad::Config{});
    m.def("d_plus",
          [](const TestFunction& f, double alpha, double t, const quad::Config& cfg) {
              return fractional::d_plus(f, alpha, t, cfg);
          },
          py::arg("f"), py::arg("alpha"), py::arg("t"), py::arg("config") = quad::Config{});
    m.def("sobolev_norm",
          [](const TestFunction& f, double alpha, double p, const quad::Config& cfg) {
              return fractional::sobolev_norm(f, alpha, p, cfg);
          },
          py::arg("f"), py::arg("alpha"), py::arg("p"), py::arg("config") = quad::Config{});
    m.def("pairing",
          [](const TestFunction& f, const TestFunction& g, double alpha,
             const quad::Config& cfg) { return fractional::pairing(f, g, alpha, cfg); },
          py::arg("f"), py::arg("g"), py::arg("alpha"), py::arg("config") = quad::Config{});

    // spectra
    m.def("curve_sample",
          [](double gamma, double mu, double xi_max, int n) {
              auto c = spectra::curve_sample(gamma, mu, xi_max, n);
              auto pred = spectra::curve_predicates(c);
              py::dict out;
              out["gamma"] = c.gamma;
              out["mu"] = c.mu;
              out["xi"] = c.xi;
              out["points"] = c.points;
              out["decay_warning"] = c.decay_warning;
              out["real_interval"] = pred.real_interval;
              out["upper_halfplane"] = pred.upper_halfplane;
              out["real_axis_crossings"] = pred.real_axis_crossings;
              out["apex"] = pred.apex;
              out["enclosing_radius"] = pred.enclosing_radius;
              return out;
          },
          py::arg("gamma"), py::arg("mu"), py::arg("xi_max") = 8.0, py::arg("n") = 2001);
    m.def("cesaro_spectrum_sample",
          [](double gamma, double p, double xi_max, int n) {
              auto c = spectra::cesaro_spectrum_sample(gamma, p, xi_max, n);
              py::dict out;
              out["xi"] = c.xi;
              out["points"] = c.points;
              out["decay_warning"] = c.decay_warning;
              return out;
          },
          py::arg("gamma"), py::arg("p"), py::arg("xi_max") = 8.0, py::arg("n") = 2001);
    m.def("self_adjoint_interval", [](double beta, double p) {
        auto iv = spectra::self_adjoint_interval(beta, p);
        return py::make_tuple(iv.lo, iv.hi);
    }, py::arg("beta"), py::arg("p") = 2.0);

    // verification
    m.def("run_suite",
          [](const std::string& name, double tol_scale, const quad::Config& cfg) {
              auto rep = verify::run_suite(name, tol_scale, cfg);
              py::list cases;
              for (const auto& c : rep.cases) {
                  py::dict d;
                  d["id"] = c.id;
                  d["lhs"] = c.lhs;
                  d["rhs"] = c.rhs;
                  d["abs_err"] = c.abs_err;
                  d["tol"] = c.tol;
                  d["pass"] = c.pass;
                  cases.append(d);
              }
              py::dict out;
              out["suite"] = rep.suite;
              out["cases"] = cases;
              out["passed"] = rep.passed();
              out["failed"] = rep.failed();
              out["skipped"] = rep.skipped;
              return out;
          },
          py::arg("name"), py::arg("tol_scale") = 1.0, py::arg("config") = quad::Config{});
}
