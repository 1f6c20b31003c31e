// asymptoscope command-line front end: transform evaluation, exponent and
// class-estimate fitting, Riemann-distribution analysis, summability checks.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "asymptoscope/ingest.hpp"
#include "asymptoscope/report.hpp"

namespace {

using namespace asco;

struct CommonOpts {
  std::string generator;
  std::string input_csv;
  std::string kernel = "lizorkin_exp";
  std::string grid_eps = "1e-4:1:64";
  int angles = 128;
  Real tol = 1e-9;
  std::string json_path;
  std::string plot_path;
};

SpectralDistribution load_distribution(const CommonOpts& o) {
  if (!o.input_csv.empty()) return ingest_csv(o.input_csv);
  if (!o.generator.empty()) return make_distribution(o.generator);
  throw validation_error("provide --generator or --input");
}

ArrayXd parse_grid(const std::string& spec) {
  double lo, hi;
  int n;
  if (std::sscanf(spec.c_str(), "%lf:%lf:%d", &lo, &hi, &n) != 3)
    throw validation_error("grid spec must be lo:hi:n, got '" + spec + "'");
  return log_spaced(lo, hi, n);
}

std::pair<long long, long long> parse_rational(const std::string& s) {
  long long p = 0, q = 1;
  const auto pos = s.find('/');
  if (pos == std::string::npos) {
    p = std::stoll(s);
  } else {
    p = std::stoll(s.substr(0, pos));
    q = std::stoll(s.substr(pos + 1));
  }
  return {p, q};
}

void emit(const json& report, const CommonOpts& o) {
  if (o.json_path.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::ofstream out(o.json_path);
    out << report.dump(2) << "\n";
    std::cout << "wrote " << o.json_path << "\n";
  }
}

void emit_plot(const CommonOpts& o, const ArrayXd& x, const ArrayXd& y,
               const ArrayXd* fit = nullptr) {
  if (o.plot_path.empty()) return;
  std::ofstream out(o.plot_path);
  out << "# eps S" << (fit ? " fit" : "") << "\n";
  for (int i = 0; i < x.size(); ++i) {
    out << x[i] << ' ' << y[i];
    if (fit) out << ' ' << (*fit)[i];
    out << '\n';
  }
}

json request_echo(const CommonOpts& o, const json& extra) {
  json req{{"generator", o.generator}, {"input", o.input_csv},   {"kernel", o.kernel},
           {"grid_eps", o.grid_eps},   {"angles", o.angles},     {"tol", o.tol}};
  if (extra.is_object()) req.update(extra);
  return req;
}

json provenance(const CommonOpts& o) {
  return json{{"abs_tol", o.tol},
              {"truncation", "terms kept above 1e-16 of running scale, tail certified below 1e-12"},
              {"grid_eps", o.grid_eps},
              {"angles", o.angles}};
}

ArrayXd fitted_curve(const ExponentReport& rep, const ArrayXd& eps) {
  ArrayXd fit(eps.size());
  for (int i = 0; i < eps.size(); ++i) {
    Real L = 1.0;
    if (rep.L_model.in_domain(eps[i])) L = eval_sv(rep.L_model, eps[i]);
    fit[i] = std::pow(eps[i], rep.alpha) * L;
  }
  // anchor the curve at the largest eps
  return fit;
}

int dispatch(CLI::App& app, const std::string& sub, const std::string& subsub,
             CommonOpts& o, std::map<std::string, std::string>& extra) {
  if (sub == "transform") {
    const SpectralDistribution f = load_distribution(o);
    const KernelSpec kernel = make_kernel(o.kernel);
    const ArrayXd ys = parse_grid(extra.count("grid-y") ? extra["grid-y"] : "0.01:10:32");
    double xlo = -5, xhi = 5;
    int xn = 41;
    if (extra.count("grid-x"))
      std::sscanf(extra["grid-x"].c_str(), "%lf:%lf:%d", &xlo, &xhi, &xn);
    ScaleGrid grid{ArrayXd::LinSpaced(xn, xlo, xhi), ys};
    const TransformField field = analyze(f, kernel, grid, default_convention(kernel));
    if (!o.plot_path.empty()) {
      std::ofstream out(o.plot_path);
      write_columnar(field, out);
    }
    emit(make_report("transform", request_echo(o, {}), to_json(field), provenance(o)), o);
    return 0;
  }
  if (sub == "exponent" || sub == "holder") {
    const SpectralDistribution f = load_distribution(o);
    const KernelSpec kernel = make_kernel(o.kernel);
    const Real x0 = extra.count("at") ? std::stod(extra["at"]) : 0.0;
    ExponentReport rep;
    if (sub == "holder") {
      rep = holder_exponent(f, kernel, x0);
    } else {
      ExponentOptions opt;
      const ArrayXd eps = parse_grid(o.grid_eps);
      opt.eps_lo = eps.minCoeff();
      opt.eps_hi = eps.maxCoeff();
      opt.n_eps = static_cast<int>(eps.size());
      opt.angles = o.angles;
      rep = estimate_weak_exponent(f, kernel, x0, opt);
    }
    if (!o.plot_path.empty()) {
      const ArrayXd eps = parse_grid(o.grid_eps);
      const TauberianProfile prof = tauberian_profile(f, kernel, x0, rep.k, eps, o.angles);
      const ArrayXd fit = fitted_curve(rep, eps);
      emit_plot(o, prof.eps, prof.S, &fit);
    }
    emit(make_report(sub, request_echo(o, {{"at", x0}}), to_json(rep), provenance(o)), o);
    return 0;
  }
  if (sub == "class-estimate") {
    const SpectralDistribution f = load_distribution(o);
    const KernelSpec kernel = make_kernel(o.kernel);
    const EstimateScope scope =
        (extra.count("scope") && extra["scope"] == "local") ? EstimateScope::local
                                                            : EstimateScope::global;
    const ClassEstimateReport rep = class_estimate_fit(f, kernel, scope);
    emit(make_report("class-estimate", request_echo(o, {{"scope", extra["scope"]}}),
                     to_json(rep), provenance(o)),
         o);
    return 0;
  }
  if (sub == "stabilize") {
    const SpectralDistribution f = load_distribution(o);
    ArrayXd xs = ArrayXd::Zero(1);
    if (extra.count("xs")) {
      std::vector<Real> v;
      std::stringstream ss(extra["xs"]);
      std::string cell;
      while (std::getline(ss, cell, ',')) v.push_back(std::stod(cell));
      xs = Eigen::Map<ArrayXd>(v.data(), v.size());
    }
    const StabilizationReport rep = stabilization_check(f, 2, xs);
    emit(make_report("stabilize", request_echo(o, {}), to_json(rep), provenance(o)), o);
    return 0;
  }
  if (sub == "riemann") {
    const auto [p, q] = parse_rational(extra.count("r") ? extra["r"] : "0");
    const RationalPoint r = classify_rational(p, q);
    if (subsub == "classify") {
      emit(make_report("riemann classify", request_echo(o, {{"r", r.str()}}), to_json(r),
                       provenance(o)),
           o);
      return 0;
    }
    if (subsub == "constants") {
      const PConstant pc = p_constant(r);
      const GammaConstant gc = gamma_constant(r);
      json res{{"r", to_json(r)},
               {"p_r", to_json(pc.value)},
               {"p_r_defined", pc.defined},
               {"gamma_r", to_json(gc.value)},
               {"gamma_error_estimate", gc.error_estimate}};
      emit(make_report("riemann constants", request_echo(o, {{"r", r.str()}}), res,
                       provenance(o)),
           o);
      return 0;
    }
    if (subsub == "zeta") {
      const Real zr = extra.count("z") ? std::stod(extra["z"]) : 0.0;
      const Real zi = extra.count("zi") ? std::stod(extra["zi"]) : 0.0;
      ZetaMethod method = ZetaMethod::cesaro;
      if (extra.count("method")) {
        if (extra["method"] == "direct") method = ZetaMethod::direct;
        else if (extra["method"] == "pole-subtracted") method = ZetaMethod::pole_subtracted;
      }
      const ZetaEvaluation ev = zeta_r(r, Complex(zr, zi), method);
      emit(make_report("riemann zeta", request_echo(o, {{"r", r.str()}, {"z", zr}}),
                       to_json(ev), provenance(o)),
           o);
      return 0;
    }
    if (subsub == "expand") {
      const Real beta = extra.count("beta") ? std::stod(extra["beta"]) : 0.0;
      const int M = extra.count("M") ? std::stoi(extra["M"]) : 3;
      const ExpansionCoefficients e = weak_expansion(r, beta, M);
      emit(make_report("riemann expand",
                       request_echo(o, {{"r", r.str()}, {"beta", beta}, {"M", M}}), to_json(e),
                       provenance(o)),
           o);
      return 0;
    }
    if (subsub == "verify") {
      const Real beta = extra.count("beta") ? std::stod(extra["beta"]) : 0.0;
      const int M = extra.count("M") ? std::stoi(extra["M"]) : 1;
      const KernelSpec kernel = make_kernel(o.kernel == "lizorkin_exp" ? "gaussian" : o.kernel);
      const ArrayXd eps = parse_grid(o.grid_eps);
      const ExpansionVerification v = verify_expansion(r, beta, kernel, eps, M);
      if (!o.plot_path.empty()) emit_plot(o, v.eps, v.residual);
      emit(make_report("riemann verify",
                       request_echo(o, {{"r", r.str()}, {"beta", beta}, {"M", M}}), to_json(v),
                       provenance(o)),
           o);
      return 0;
    }
    throw validation_error("riemann subcommand must be classify|constants|zeta|expand|verify");
  }
  if (sub == "sum") {
    if (subsub == "abel" || subsub == "lambert") {
      const CoefficientStream coeffs = make_stream(extra.count("generator")
                                                       ? extra["generator"]
                                                       : o.generator);
      if (subsub == "lambert") {
        const Real y = extra.count("y") ? std::stod(extra["y"]) : 0.01;
        const Complex v = rho_sum(coeffs, SummabilityKernel::lambert(), y);
        emit(make_report("sum lambert", request_echo(o, {{"y", y}}),
                         json{{"value", to_json(v)}}, provenance(o)),
             o);
      } else {
        const ArrayXd ys = log_spaced(2e-4, 0.25, 12).reverse();
        const AbelLimit lim = abel_limit(coeffs, ys);
        emit(make_report("sum abel", request_echo(o, {}),
                         json{{"beta", to_json(lim.beta)},
                              {"converged", lim.converged},
                              {"error_estimate", lim.error_estimate}},
                         provenance(o)),
             o);
      }
      return 0;
    }
    if (subsub == "cesaro") {
      const CoefficientStream coeffs = make_stream(extra.count("generator")
                                                       ? extra["generator"]
                                                       : o.generator);
      const int k = extra.count("k") ? std::stoi(extra["k"]) : 1;
      const long long N = extra.count("n") ? std::stoll(extra["n"]) : 100000;
      std::vector<Complex> partial(N);
      Complex s = 0.0;
      for (long long n = 0; n < N; ++n) {
        s += coeffs.c(n);
        partial[static_cast<size_t>(n)] = s;
      }
      const auto means = cesaro_mean(partial, k);
      emit(make_report("sum cesaro", request_echo(o, {{"k", k}}),
                       json{{"value", to_json(means.back())}}, provenance(o)),
           o);
      return 0;
    }
    if (subsub == "littlewood") {
      const CoefficientStream coeffs = make_stream(extra.count("generator")
                                                       ? extra["generator"]
                                                       : o.generator);
      const Real beta = extra.count("beta") ? std::stod(extra["beta"]) : 0.0;
      const LittlewoodReport rep = littlewood_check(coeffs, beta);
      emit(make_report("sum littlewood", request_echo(o, {{"beta", beta}}), to_json(rep),
                       provenance(o)),
           o);
      return 0;
    }
    if (subsub == "laplace") {
      SpectralDistribution h = heaviside();
      const std::string gen = extra.count("generator") ? extra["generator"] : o.generator;
      if (gen == "delta") {
        AtomicSpectrum a;
        a.frequencies = ArrayXd::Zero(1);
        a.amplitudes = ArrayXcd::Ones(1);
        a.label = "delta";
        h = a;
      } else if (gen.rfind("power:", 0) == 0) {
        HomogeneousModel m = abs_power(std::stod(gen.substr(6)));
        m.coeff_minus = 0.0;
        h = m;
      } else if (!gen.empty() && gen != "heaviside") {
        h = make_distribution(gen);
      }
      const Real omega = extra.count("omega") ? std::stod(extra["omega"]) : 1.0;
      const Real kappa = extra.count("kappa") ? std::stod(extra["kappa"]) : 0.0;
      const int k = extra.count("k") ? std::stoi(extra["k"]) : 1;
      const Real alpha = extra.count("alpha") ? std::stod(extra["alpha"]) : 0.0;
      const ArrayXd eps = parse_grid(o.grid_eps);
      const LaplaceProfile prof = laplace_profile(h, omega, kappa, k, alpha, eps);
      if (!o.plot_path.empty()) emit_plot(o, prof.eps, prof.S);
      emit(make_report("sum laplace",
                       request_echo(o, {{"omega", omega}, {"kappa", kappa}, {"k", k}}),
                       to_json(prof), provenance(o)),
           o);
      return 0;
    }
    throw validation_error("sum subcommand must be abel|lambert|cesaro|littlewood|laplace");
  }
  if (sub == "kernel") {
    const KernelSpec kernel = make_kernel(o.kernel);
    if (subsub == "moments") {
      const int m_max = extra.count("m") ? std::stoi(extra["m"]) : 4;
      json ms = json::array();
      for (int m = 0; m <= m_max; ++m) ms.push_back(to_json(moment(kernel, m)));
      emit(make_report("kernel moments", request_echo(o, {}), json{{"moments", ms}},
                       provenance(o)),
           o);
      return 0;
    }
    if (subsub == "nondegeneracy") {
      const NondegeneracyReport nd = is_nondegenerate(kernel);
      json res{{"verdict", nd.verdict},
               {"witness_plus", nd.witness_plus},
               {"witness_minus", nd.witness_minus}};
      if (nd.verdict) {
        const NondegeneracyIndex idx = nondegeneracy_index(kernel);
        res["index"] = idx.tau;
        res["index_resolution"] = idx.resolution;
      }
      if (const auto s = strong_nondegeneracy(kernel)) {
        res["strong"] = json{{"N", s->N}, {"r", s->r}, {"C", s->C}};
      } else {
        res["strong"] = nullptr;
      }
      emit(make_report("kernel nondegeneracy", request_echo(o, {}), res, provenance(o)), o);
      return 0;
    }
    if (subsub == "reconstruct") {
      const KernelSpec eta = make_reconstruction_wavelet(kernel);
      const Complex cp = calibration_constant(kernel, eta, +1);
      const Complex cm = calibration_constant(kernel, eta, -1);
      emit(make_report("kernel reconstruct", request_echo(o, {}),
                       json{{"c_plus", to_json(cp)}, {"c_minus", to_json(cm)},
                            {"eta", eta.label()}},
                       provenance(o)),
           o);
      return 0;
    }
    throw validation_error("kernel subcommand must be moments|nondegeneracy|reconstruct");
  }
  std::cerr << app.help() << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"asymptoscope: regularizing transforms and Tauberian exponent estimation"};
  app.allow_extras();

  CommonOpts o;
  std::map<std::string, std::string> extra;
  std::string sub, subsub;

  app.add_option("subcommand", sub, "transform|exponent|holder|class-estimate|stabilize|riemann|sum|kernel");
  app.add_option("--generator", o.generator, "builtin distribution, e.g. weierstrass:0.6");
  app.add_option("--input", o.input_csv, "CSV signal path");
  app.add_option("--kernel", o.kernel, "kernel name, e.g. gaussian, lizorkin_exp, shifted_lizorkin:1.0");
  app.add_option("--grid-eps", o.grid_eps, "eps grid lo:hi:n");
  app.add_option("--angles", o.angles, "half-circle discretization");
  app.add_option("--tol", o.tol, "quadrature tolerance");
  app.add_option("--json", o.json_path, "report output path (stdout if omitted)");
  app.add_option("--plot", o.plot_path, "columnar plot-data path");
  for (const char* key : {"at", "r", "z", "zi", "beta", "M", "method", "scope", "xs",
                          "grid-x", "grid-y", "y", "k", "n", "omega", "kappa", "alpha",
                          "generator2"}) {
    app.add_option(std::string("--") + key, extra[key]);
  }

  try {
    app.parse(argc, argv);
    // the second positional, when present, selects the sub-subcommand
    const auto& positionals = app.remaining();
    if (!positionals.empty()) subsub = positionals.front();
    if (sub.empty()) {
      std::cerr << app.help() << "\n";
      return 2;
    }
    // entries the option map stored as empty strings were never set
    for (auto it = extra.begin(); it != extra.end();) {
      if (it->second.empty()) it = extra.erase(it);
      else ++it;
    }
    if (!extra.count("generator") && !o.generator.empty()) extra["generator"] = o.generator;
    return dispatch(app, sub, subsub, o, extra);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const numerical_error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
