#include "asymptoscope/report.hpp"

namespace asco {

json to_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

namespace {

json array_of(const ArrayXd& a) {
  json out = json::array();
  for (int i = 0; i < a.size(); ++i) out.push_back(a[i]);
  return out;
}

const char* classification_name(Classification c) {
  switch (c) {
    case Classification::cusp: return "cusp";
    case Classification::oscillating: return "oscillating";
    case Classification::undetermined: return "undetermined";
  }
  return "?";
}

}  // namespace

json to_json(const SlowVariationModel& m) {
  json out;
  switch (m.family) {
    case SlowVariationModel::Family::constant: out["family"] = "constant"; break;
    case SlowVariationModel::Family::log_power: out["family"] = "log_power"; break;
    case SlowVariationModel::Family::loglog_power: out["family"] = "loglog_power"; break;
    case SlowVariationModel::Family::product: out["family"] = "product"; break;
  }
  out["gamma_log"] = m.gamma_log;
  out["gamma_loglog"] = m.gamma_loglog;
  out["locus"] = m.locus == Locus::origin ? "origin" : "infinity";
  return out;
}

json to_json(const TauberianProfile& p) {
  return json{{"eps", array_of(p.eps)}, {"S", array_of(p.S)}, {"k", p.k}, {"x0", p.x0}};
}

json to_json(const ExponentReport& r) {
  json sweep = json::array();
  for (const auto& e : r.sweep)
    sweep.push_back(json{{"k", e.k},
                         {"bounded", e.bounded},
                         {"alpha", e.alpha},
                         {"L", to_json(e.L)},
                         {"residual", e.residual}});
  json out{{"alpha", r.alpha},
           {"L", to_json(r.L_model)},
           {"k", r.k},
           {"residual", r.residual},
           {"classification", classification_name(r.classification)},
           {"sweep", sweep},
           {"unbounded_at_kmax", r.unbounded_at_kmax},
           {"moment_condition_ok", r.moment_condition_ok}};
  if (r.drift)
    out["drift"] = json{{"base", to_json(r.drift->base)},
                        {"slope", to_json(r.drift->slope)},
                        {"L", to_json(r.drift->model)}};
  if (r.holder_alpha) out["holder_alpha"] = *r.holder_alpha;
  if (!r.polynomial_correction.empty()) {
    json pc = json::array();
    for (const auto& c : r.polynomial_correction) pc.push_back(to_json(c));
    out["polynomial_correction"] = pc;
  }
  return out;
}

json to_json(const ClassEstimateReport& r) {
  return json{{"k", r.k},
              {"l", r.l},
              {"C", r.C},
              {"scope", r.scope == EstimateScope::global ? "global" : "local"},
              {"max_violation", r.max_violation},
              {"found", r.found}};
}

json to_json(const GlobalHolderReport& r) {
  return json{{"pass", r.pass}, {"C", r.C}, {"worst_x", r.worst_x}, {"worst_y", r.worst_y}};
}

json to_json(const StabilizationReport& r) {
  json ell = json::array();
  for (const auto& e : r.ell)
    ell.push_back(json{{"x", e.x},
                       {"ell", to_json(e.limit)},
                       {"diverged", e.diverged},
                       {"residual", e.residual}});
  return json{{"stabilizes", r.stabilizes},
              {"alpha", r.alpha},
              {"L", to_json(r.L)},
              {"T_power", r.T_power},
              {"ell", ell}};
}

json to_json(const RationalPoint& r) {
  std::string word;
  for (ThetaLetter l : r.word.letters) {
    if (!word.empty()) word += ".";
    word += l == ThetaLetter::K2 ? "K2" : (l == ThetaLetter::K2inv ? "K2inv" : "U");
  }
  return json{{"p", std::to_string(r.p)},
              {"q", std::to_string(r.q)},
              {"value", r.str()},
              {"class", r.parity == ParityClass::S0 ? "S0" : "S1"},
              {"theta_word", word}};
}

json to_json(const ZetaEvaluation& z) {
  const char* method = z.method == ZetaMethod::direct
                           ? "direct"
                           : (z.method == ZetaMethod::cesaro ? "cesaro" : "pole_subtracted");
  return json{{"r", to_json(z.r)},
              {"z", to_json(z.z)},
              {"value", to_json(z.value)},
              {"method", method},
              {"cesaro_order", z.cesaro_order},
              {"error_estimate", z.error_estimate}};
}

json to_json(const ExpansionCoefficients& e) {
  json taylor = json::array();
  for (const auto& c : e.taylor) taylor.push_back(to_json(c));
  return json{{"r", to_json(e.r)},
              {"beta", to_json(e.beta)},
              {"singular_coefficient", to_json(e.singular_coefficient)},
              {"has_log_term", e.has_log_term},
              {"log_coefficient", to_json(e.log_coefficient)},
              {"constant_term", to_json(e.constant_term)},
              {"constant_term_b", to_json(e.constant_term_b)},
              {"taylor", taylor},
              {"p_r", to_json(e.p_r)},
              {"gamma_r", to_json(e.gamma_r)}};
}

json to_json(const ExpansionVerification& v) {
  return json{{"eps", array_of(v.eps)},
              {"residual", array_of(v.residual)},
              {"decay_order", v.decay_order},
              {"threshold", v.threshold},
              {"pass", v.pass}};
}

json to_json(const LittlewoodReport& r) {
  return json{{"abel_value", to_json(r.abel_value)},
              {"abel_matches", r.abel_matches},
              {"tauberian_constant", r.tauberian_constant},
              {"tauberian_ok", r.tauberian_ok},
              {"partial_sums_converge", r.partial_sums_converge},
              {"partial_sum_value", to_json(r.partial_sum_value)},
              {"all_pass", r.all_pass()}};
}

json to_json(const LaplaceProfile& p) {
  return json{{"eps", array_of(p.eps)}, {"S", array_of(p.S)}, {"kappa", p.kappa}, {"k", p.k}};
}

json to_json(const TransformField& f) {
  json out{{"kind", "field"},
           {"convention", convention_name(f.convention)},
           {"kernel", f.kernel_label},
           {"distribution", f.distribution_label},
           {"x", array_of(f.grid.x)},
           {"y", array_of(f.grid.y)}};
  json chans = json::array();
  for (const auto& ch : f.channels) {
    json re = json::array(), im = json::array();
    for (int j = 0; j < ch.rows(); ++j) {
      json rrow = json::array(), irow = json::array();
      for (int i = 0; i < ch.cols(); ++i) {
        rrow.push_back(ch(j, i).real());
        irow.push_back(ch(j, i).imag());
      }
      re.push_back(rrow);
      im.push_back(irow);
    }
    chans.push_back(json{{"re", re}, {"im", im}});
  }
  out["channels"] = chans;
  if (!f.warnings.empty()) out["warnings"] = f.warnings;
  return out;
}

json make_report(const std::string& subcommand, const json& request, const json& result,
                 const json& provenance) {
  return json{{"schema_version", kSchemaVersion},
              {"subcommand", subcommand},
              {"request", request},
              {"result", result},
              {"provenance", provenance}};
}

}  // namespace asco
