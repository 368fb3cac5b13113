// Command-line surface: apply the transforms, sample spectrum curves,
// evaluate kernels and norms, run the verification suites, export plot data.
//
// Exit codes: 0 ok, 1 verification failure, 2 usage/domain error,
// 3 numerical non-convergence.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "stieltjes/fractional.hpp"
#include "stieltjes/functions.hpp"
#include "stieltjes/kernels.hpp"
#include "stieltjes/operators.hpp"
#include "stieltjes/quad.hpp"
#include "stieltjes/special.hpp"
#include "stieltjes/spectra.hpp"
#include "stieltjes/verify.hpp"

using nlohmann::json;
using namespace stieltjes;

namespace {

struct GlobalOpts {
    quad::Config cfg;
    std::string format = "text";
    std::string output;  // empty = stdout
};

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

void load_config_file(quad::Config& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config file not found: " + path);
    json j = json::parse(in);
    if (j.contains("abs_tol")) cfg.abs_tol = j["abs_tol"].get<double>();
    if (j.contains("rel_tol")) cfg.rel_tol = j["rel_tol"].get<double>();
    if (j.contains("max_evals")) cfg.max_evals = j["max_evals"].get<long>();
    if (j.contains("truncation_radius"))
        cfg.truncation_radius = j["truncation_radius"].get<double>();
    if (j.contains("pv_epsilons"))
        cfg.pv_epsilons = j["pv_epsilons"].get<std::vector<double>>();
    cfg.validate();
}

// data records never carry timestamps, so identical invocations produce
// byte-identical files
void emit(const GlobalOpts& g, const json& doc, const std::string& csv,
          const std::string& text) {
    std::string payload;
    if (g.format == "json")
        payload = doc.dump(2) + "\n";
    else if (g.format == "csv")
        payload = csv;
    else
        payload = text;
    if (g.output.empty()) {
        std::cout << payload;
        return;
    }
    const std::string tmp = g.output + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write: " + g.output);
        out << payload;
    }
    if (std::rename(tmp.c_str(), g.output.c_str()) != 0)
        throw std::invalid_argument("cannot move output into place: " + g.output);
}

json meta(const std::string& command) {
    return json{{"tool", "stieltjes"}, {"version", "0.1.0"}, {"command", command}};
}

// ---------------------------------------------------------------------------

struct TransformArgs {
    std::string op = "stieltjes";
    std::string fn = "exp:1";
    std::string fn2 = "exp:1";
    std::string points = "1";
    double beta = 1.0, mu = 1.0, p = 2.0, gamma = 1.0, r = 1.5;
    int n = 1, m = 1;
};

// {lhs, rhs, abs_err, terms[]} records for the product-expansion identity
int run_otimes_expansion(const GlobalOpts& g, const TransformArgs& a) {
    const TestFunction f = catalog::parse(a.fn);
    const TestFunction f2 = catalog::parse(a.fn2);
    json records = json::array();
    std::ostringstream csv, text;
    csv << "t,lhs,rhs,abs_err\n";
    for (double t : parse_list(a.points)) {
        auto rep = ops::stieltjes_of_otimes(a.n, a.m, f, f2, t, a.r, g.cfg);
        json terms = json::array();
        for (const auto& tm : rep.terms)
            terms.push_back({{"i", tm.i},
                             {"j", tm.j},
                             {"coef", tm.coef},
                             {"sf", tm.sf},
                             {"sg", tm.sg}});
        records.push_back({{"t", t},
                           {"lhs", rep.lhs},
                           {"rhs", rep.rhs},
                           {"rhs_alt", rep.rhs_alt},
                           {"abs_err", rep.abs_err},
                           {"terms", terms}});
        csv << t << "," << rep.lhs << "," << rep.rhs << "," << rep.abs_err << "\n";
        text << "t=" << t << "  lhs=" << std::setprecision(12) << rep.lhs
             << "  rhs=" << rep.rhs << "  abs_err=" << std::setprecision(3) << rep.abs_err
             << "  terms=" << rep.terms.size() << "\n";
    }
    json doc{{"schema", 1}, {"metadata", meta("transform")}, {"records", records}};
    doc["metadata"]["op"] = "otimes-expansion";
    doc["metadata"]["n"] = a.n;
    doc["metadata"]["m"] = a.m;
    emit(g, doc, csv.str(), text.str());
    return 0;
}

int run_transform(const GlobalOpts& g, const TransformArgs& a) {
    if (a.op == "otimes-expansion") return run_otimes_expansion(g, a);
    const TestFunction f = catalog::parse(a.fn);
    const std::vector<double> ts = parse_list(a.points);
    quad::Config tight = g.cfg;
    tight.abs_tol = g.cfg.abs_tol * 0.1;
    tight.rel_tol = g.cfg.rel_tol * 0.1;

    auto eval = [&](double t) -> std::pair<std::complex<double>, double> {
        auto once = [&](const quad::Config& c) -> std::complex<double> {
            if (a.op == "stieltjes")
                return ops::stieltjes_apply({a.beta, a.mu, a.p}, f, t, c);
            if (a.op == "subordinated")
                return ops::stieltjes_subordinated({a.beta, a.mu, a.p}, f, t, c);
            if (a.op == "stieltjes-line")
                return ops::stieltjes_line_apply({a.beta, a.mu, a.p}, f, t, c);
            if (a.op == "cesaro") return ops::cesaro_apply({a.gamma, a.p}, f, t, c);
            if (a.op == "hilbert-plus") return ops::hilbert_plus(f, t, c);
            if (a.op == "hilbert") return ops::hilbert_line(f, t, c);
            throw std::invalid_argument("unknown operator '" + a.op + "'");
        };
        const auto v = once(g.cfg);
        const auto w = once(tight);
        return {w, std::abs(v - w)};
    };

    if (a.op == "stieltjes" || a.op == "subordinated") {
        const ops::StieltjesParams sp{a.beta, a.mu, a.p};
        if (!sp.is_bounded())
            throw unbounded_operator_error(
                "transform: (beta, mu, p) violates 0 < beta - 1/p < mu");
    }

    json records = json::array();
    std::ostringstream csv, text;
    csv << "t,value,err\n";
    for (double t : ts) {
        auto [v, err] = eval(t);
        if (v.imag() == 0.0) {
            records.push_back({{"t", t}, {"value", v.real()}, {"err_estimate", err}});
            csv << t << "," << v.real() << "," << err << "\n";
            text << "t=" << t << "  value=" << std::setprecision(15) << v.real()
                 << "  err~" << std::setprecision(3) << err << "\n";
        } else {
            records.push_back({{"t", t},
                               {"value_re", v.real()},
                               {"value_im", v.imag()},
                               {"err_estimate", err}});
            csv << t << "," << v.real() << "+" << v.imag() << "i," << err << "\n";
            text << "t=" << t << "  value=" << std::setprecision(15) << v.real() << "+"
                 << v.imag() << "i  err~" << std::setprecision(3) << err << "\n";
        }
    }
    json doc{{"schema", 1}, {"metadata", meta("transform")}, {"records", records}};
    doc["metadata"]["op"] = a.op;
    doc["metadata"]["fn"] = a.fn;
    emit(g, doc, csv.str(), text.str());
    return 0;
}

// ---------------------------------------------------------------------------

struct SpectrumArgs {
    std::optional<double> gamma, beta;
    double mu = 1.0, p = 2.0;
    bool cesaro = false;
    double xi_max = 8.0;
    int samples = 2001;
};

json predicates_json(const spectra::CurvePredicates& pr) {
    return json{{"real_interval", pr.real_interval},
                {"upper_halfplane", pr.upper_halfplane},
                {"real_axis_crossings", pr.real_axis_crossings},
                {"apex", {pr.apex.real(), pr.apex.imag()}},
                {"enclosing_radius", pr.enclosing_radius}};
}

int emit_curve(const GlobalOpts& g, const spectra::SpectrumCurve& curve, json params) {
    auto pred = spectra::curve_predicates(curve);
    json pts = json::array();
    std::ostringstream csv, text;
    csv << "xi,re,im\n";
    for (size_t j = 0; j < curve.points.size(); ++j) {
        pts.push_back({curve.xi[j], curve.points[j].real(), curve.points[j].imag()});
        csv << curve.xi[j] << "," << curve.points[j].real() << ","
            << curve.points[j].imag() << "\n";
    }
    params["decay_warning"] = curve.decay_warning;
    json doc{{"schema", 1},
             {"metadata", meta("spectrum")},
             {"params", params},
             {"points", pts},
             {"predicates", predicates_json(pred)}};
    text << "samples=" << curve.points.size() << "  apex=" << pred.apex.real();
    if (pred.apex.imag() != 0.0) text << "+" << pred.apex.imag() << "i";
    text << "  real_interval=" << (pred.real_interval ? "yes" : "no")
         << "  upper_halfplane=" << (pred.upper_halfplane ? "yes" : "no")
         << "  enclosing_radius=" << pred.enclosing_radius
         << "  crossings=" << pred.real_axis_crossings.size()
         << (curve.decay_warning ? "  [decay warning: raise --xi-max]" : "") << "\n";
    emit(g, doc, csv.str(), text.str());
    return 0;
}

int run_spectrum(const GlobalOpts& g, const SpectrumArgs& a) {
    if (a.cesaro) {
        if (!a.gamma) throw std::invalid_argument("spectrum: --gamma is required with --cesaro");
        auto curve = spectra::cesaro_spectrum_sample(*a.gamma, a.p, a.xi_max, a.samples);
        return emit_curve(g, curve,
                          json{{"family", "cesaro"}, {"gamma", *a.gamma}, {"p", a.p}});
    }
    double gamma_eff;
    json params;
    if (a.beta) {
        gamma_eff = *a.beta - 1.0 / a.p;
        params = json{{"family", "stieltjes"}, {"beta", *a.beta}, {"mu", a.mu}, {"p", a.p}};
    } else if (a.gamma) {
        gamma_eff = *a.gamma;
        params = json{{"family", "stieltjes"}, {"gamma", *a.gamma}, {"mu", a.mu}};
    } else {
        throw std::invalid_argument("spectrum: need --gamma or --beta");
    }
    auto curve = spectra::curve_sample(gamma_eff, a.mu, a.xi_max, a.samples);
    return emit_curve(g, curve, params);
}

// ---------------------------------------------------------------------------

struct NormArgs {
    std::string op = "stieltjes";
    double beta = 1.0, mu = 1.0, p = 2.0, gamma = 1.0, nu = 1.0, exponent = 2.0;
};

int run_norm(const GlobalOpts& g, const NormArgs& a) {
    double value;
    if (a.op == "stieltjes")
        value = ops::stieltjes_norm({a.beta, a.mu, a.p});
    else if (a.op == "cesaro")
        value = ops::cesaro_norm({a.gamma, a.p});
    else if (a.op == "hilbert-plus" || a.op == "hilbert")
        value = ops::hilbert_norm(a.p);
    else if (a.op == "phi-sup")
        value = kernels::phi_sup_norm({a.beta, a.mu});
    else if (a.op == "phi-lp")
        value = kernels::phi_lp_norm({a.beta, a.mu}, a.exponent);
    else if (a.op == "psi-sup")
        value = kernels::psi_sup_norm({a.gamma, a.nu});
    else if (a.op == "psi-lp")
        value = kernels::psi_lp_norm({a.gamma, a.nu}, a.exponent);
    else
        throw std::invalid_argument("unknown norm '" + a.op + "'");
    json doc{{"schema", 1},
             {"metadata", meta("norm")},
             {"records", json::array({{{"op", a.op}, {"value", value}}})}};
    std::ostringstream text;
    text << std::setprecision(15) << value << "\n";
    emit(g, doc, "op,value\n" + a.op + "," + std::to_string(value) + "\n", text.str());
    return 0;
}

// ---------------------------------------------------------------------------

struct KernelArgs {
    std::string family = "phi";
    double beta = 1.0, mu = 2.0, gamma = 1.0, nu = 1.0;
    std::optional<double> eval_at, lp, fourier_xi;
    bool sup = false;
};

int run_kernel(const GlobalOpts& g, const KernelArgs& a) {
    json records = json::array();
    std::ostringstream csv, text;
    csv << "what,value\n";
    auto push = [&](const std::string& what, double re, double im = 0.0) {
        if (im == 0.0) {
            records.push_back({{"what", what}, {"value", re}});
            csv << what << "," << re << "\n";
            text << what << " = " << std::setprecision(15) << re << "\n";
        } else {
            records.push_back({{"what", what}, {"value_re", re}, {"value_im", im}});
            csv << what << "," << re << "+" << im << "i\n";
            text << what << " = " << std::setprecision(15) << re << "+" << im << "i\n";
        }
    };
    const bool phi = a.family == "phi";
    if (!phi && a.family != "psi")
        throw std::invalid_argument("kernel: --family must be phi or psi");
    if (a.eval_at) {
        const double v = phi ? kernels::phi({a.beta, a.mu}, *a.eval_at)
                             : kernels::psi({a.gamma, a.nu}, *a.eval_at);
        push("eval", v);
    }
    if (a.sup)
        push("sup_norm", phi ? kernels::phi_sup_norm({a.beta, a.mu})
                             : kernels::psi_sup_norm({a.gamma, a.nu}));
    if (a.lp)
        push("lp_norm", phi ? kernels::phi_lp_norm({a.beta, a.mu}, *a.lp)
                            : kernels::psi_lp_norm({a.gamma, a.nu}, *a.lp));
    if (a.fourier_xi) {
        const auto v = phi ? kernels::phi_fourier({a.beta, a.mu}, *a.fourier_xi)
                           : kernels::psi_fourier({a.gamma, a.nu}, *a.fourier_xi);
        push("fourier", v.real(), v.imag());
    }
    if (records.empty())
        throw std::invalid_argument(
            "kernel: pick at least one of --eval/--sup-norm/--lp-norm/--fourier");
    json doc{{"schema", 1}, {"metadata", meta("kernel")}, {"records", records}};
    emit(g, doc, csv.str(), text.str());
    return 0;
}

// ---------------------------------------------------------------------------

int run_verify(const GlobalOpts& g, const std::string& suite, double tol_scale) {
    verify::Report rep = verify::run_suite(suite, tol_scale, g.cfg);
    json cases = json::array();
    std::ostringstream csv, text;
    csv << "id,lhs,rhs,abs_err,tol,pass\n";
    for (const auto& c : rep.cases) {
        cases.push_back({{"id", c.id},
                         {"lhs", c.lhs},
                         {"rhs", c.rhs},
                         {"abs_err", c.abs_err},
                         {"tol", c.tol},
                         {"pass", c.pass}});
        csv << c.id << "," << c.lhs << "," << c.rhs << "," << c.abs_err << "," << c.tol
            << "," << (c.pass ? 1 : 0) << "\n";
        text << (c.pass ? "[ ok ] " : "[FAIL] ") << c.id << "  err=" << c.abs_err
             << "  tol=" << c.tol << "\n";
    }
    json doc{{"schema", 1},
             {"metadata", meta("verify")},
             {"suite", rep.suite},
             {"cases", cases},
             {"summary",
              {{"passed", rep.passed()}, {"failed", rep.failed()}, {"skipped", rep.skipped}}}};
    text << "suite " << rep.suite << ": " << rep.passed() << " passed, " << rep.failed()
         << " failed, " << rep.skipped << " skipped\n";
    emit(g, doc, csv.str(), text.str());
    return rep.failed() == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------

int run_atlas(GlobalOpts g, const std::string& out_dir, const std::string& fmt) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    g.format = fmt;
    json index = json::array();
    auto save = [&](const std::string& name, const spectra::SpectrumCurve& curve,
                    json params) {
        GlobalOpts local = g;
        local.output = out_dir + "/" + name + "." + (fmt == "json" ? "json" : "csv");
        emit_curve(local, curve, params);
        index.push_back({{"file", local.output}, {"params", params}});
    };
    // one family per figure: gamma sweep at mu = 1, mu sweep at gamma = 1,
    // the symmetric line, the quarter cases, a Cesaro sweep
    for (double gamma : {0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9})
        save("upsilon_mu1_gamma" + std::to_string(gamma).substr(0, 4),
             spectra::curve_sample(gamma, 1.0, 8.0, 2001),
             json{{"gamma", gamma}, {"mu", 1.0}});
    for (double mu : {1.5, 2.0, 3.0, 5.0, 7.0, 12.0})
        save("upsilon_gamma1_mu" + std::to_string(mu).substr(0, 4),
             spectra::curve_sample(1.0, mu, 8.0, 2001), json{{"gamma", 1.0}, {"mu", mu}});
    for (double mu : {0.5, 1.0, 2.0, 4.0})
        save("upsilon_symmetric_mu" + std::to_string(mu).substr(0, 3),
             spectra::curve_sample(mu / 2.0, mu, 8.0, 2001),
             json{{"gamma", mu / 2.0}, {"mu", mu}});
    save("upsilon_quarter_mu1", spectra::curve_sample(0.25, 1.0, 8.0, 2001),
         json{{"gamma", 0.25}, {"mu", 1.0}});
    save("upsilon_quarter_mu2", spectra::curve_sample(0.25, 2.0, 8.0, 2001),
         json{{"gamma", 0.25}, {"mu", 2.0}});
    for (double p : {1.5, 2.0, 4.0})
        save("cesaro_gamma1_p" + std::to_string(p).substr(0, 3),
             spectra::cesaro_spectrum_sample(1.0, p, 4000.0, 4001),
             json{{"family", "cesaro"}, {"gamma", 1.0}, {"p", p}});
    GlobalOpts idx = g;
    idx.format = "json";
    idx.output = out_dir + "/index.json";
    emit(idx, json{{"schema", 1}, {"metadata", meta("atlas")}, {"curves", index}}, "", "");
    std::cout << "atlas: wrote " << index.size() << " curves to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Stieltjes / Cesaro operator toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    std::string config_path;
    if (const char* env = std::getenv("STIELTJES_CONFIG")) config_path = env;
    std::string pv_eps;
    app.add_option("--config", config_path, "JSON config file (or $STIELTJES_CONFIG)");
    app.add_option("--abs-tol", g.cfg.abs_tol, "quadrature absolute tolerance");
    app.add_option("--rel-tol", g.cfg.rel_tol, "quadrature relative tolerance");
    app.add_option("--max-evals", g.cfg.max_evals, "evaluation budget per integral");
    app.add_option("--truncation-radius", g.cfg.truncation_radius,
                   "whole-line / oscillatory cutoff");
    app.add_option("--pv-epsilons", pv_eps, "excision radii, e.g. 1e-2,1e-3,1e-4");
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--output,-o", g.output, "write to file instead of stdout");

    TransformArgs ta;
    auto* transform = app.add_subcommand("transform", "apply an operator at sample points");
    transform->add_option(
        "--op", ta.op,
        "stieltjes|subordinated|stieltjes-line|cesaro|hilbert-plus|hilbert|otimes-expansion");
    transform->add_option("--fn", ta.fn, "catalog function id, e.g. recip1p:1")->required();
    transform->add_option("--fn2", ta.fn2, "second operand for otimes-expansion");
    transform->add_option("--n", ta.n, "expansion order n");
    transform->add_option("--m", ta.m, "expansion order m");
    transform->add_option("--r", ta.r, "working exponent for the expansion");
    transform->add_option("--points", ta.points, "comma-separated evaluation points")
        ->required();
    transform->add_option("--beta", ta.beta, "Stieltjes beta");
    transform->add_option("--mu", ta.mu, "Stieltjes mu");
    transform->add_option("--p", ta.p, "Lebesgue exponent");
    transform->add_option("--gamma", ta.gamma, "Cesaro gamma");

    SpectrumArgs sa;
    auto* spectrum = app.add_subcommand("spectrum", "sample a spectrum curve");
    double sa_gamma = 0.0, sa_beta = 0.0;
    auto* og = spectrum->add_option("--gamma", sa_gamma, "curve parameter gamma");
    auto* ob = spectrum->add_option("--beta", sa_beta, "operator beta (uses gamma = beta - 1/p)");
    og->excludes(ob);
    ob->excludes(og);
    spectrum->add_option("--mu", sa.mu, "mu");
    spectrum->add_option("--p", sa.p, "Lebesgue exponent");
    spectrum->add_flag("--cesaro", sa.cesaro, "sample the Cesaro spectrum instead");
    spectrum->add_option("--xi-max", sa.xi_max, "sweep window [-xi_max, xi_max]");
    spectrum->add_option("--samples", sa.samples, "number of samples");

    NormArgs na;
    auto* norm = app.add_subcommand("norm", "closed-form operator/kernel norms");
    norm->add_option("--op", na.op,
                     "stieltjes|cesaro|hilbert-plus|phi-sup|phi-lp|psi-sup|psi-lp");
    norm->add_option("--beta", na.beta, "beta");
    norm->add_option("--mu", na.mu, "mu");
    norm->add_option("--p", na.p, "Lebesgue exponent");
    norm->add_option("--gamma", na.gamma, "gamma");
    norm->add_option("--nu", na.nu, "nu");
    norm->add_option("--exponent", na.exponent, "Lp exponent for kernel norms");

    KernelArgs ka;
    auto* kernel = app.add_subcommand("kernel", "evaluate the phi/psi kernel families");
    kernel->add_option("--family", ka.family, "phi|psi");
    kernel->add_option("--beta", ka.beta, "phi beta");
    kernel->add_option("--mu", ka.mu, "phi mu");
    kernel->add_option("--gamma", ka.gamma, "psi gamma");
    kernel->add_option("--nu", ka.nu, "psi nu");
    double ka_eval = 0.0, ka_lp = 0.0, ka_xi = 0.0;
    auto* oe = kernel->add_option("--eval", ka_eval, "evaluate at t");
    kernel->add_flag("--sup-norm", ka.sup, "sup norm");
    auto* ol = kernel->add_option("--lp-norm", ka_lp, "Lp norm for this exponent");
    auto* of = kernel->add_option("--fourier", ka_xi, "Fourier transform at xi");

    std::string suite = "all";
    double tol_scale = 1.0;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite, "special|kernels|fractional|operators|spectra|all");
    verify_cmd->add_option("--tol-scale", tol_scale, "multiply all tolerances");

    std::string atlas_dir = "atlas";
    std::string atlas_fmt = "csv";
    auto* atlas = app.add_subcommand("atlas", "export the curve atlas");
    atlas->add_option("--out-dir", atlas_dir, "output directory");
    atlas->add_option("--atlas-format", atlas_fmt, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (!config_path.empty()) load_config_file(g.cfg, config_path);
        if (!pv_eps.empty()) g.cfg.pv_epsilons = parse_list(pv_eps);
        g.cfg.validate();
        if (*transform) return run_transform(g, ta);
        if (*spectrum) {
            if (og->count()) sa.gamma = sa_gamma;
            if (ob->count()) sa.beta = sa_beta;
            return run_spectrum(g, sa);
        }
        if (*norm) return run_norm(g, na);
        if (*kernel) {
            if (oe->count()) ka.eval_at = ka_eval;
            if (ol->count()) ka.lp = ka_lp;
            if (of->count()) ka.fourier_xi = ka_xi;
            return run_kernel(g, ka);
        }
        if (*verify_cmd) return run_verify(g, suite, tol_scale);
        if (*atlas) return run_atlas(g, atlas_dir, atlas_fmt);
    } catch (const convergence_error& e) {
        std::cerr << "non-convergence: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
