#include "asymptoscope/asymptotics.hpp"

#include <algorithm>
#include <cmath>

#include "asymptoscope/quadrature.hpp"

namespace asco {

namespace {

// Map h to the internal origin-side variable.
Real to_origin(Locus locus, Real h) { return locus == Locus::origin ? h : 1.0 / h; }

Real eval_origin(const SlowVariationModel& m, Real h) {
  switch (m.family) {
    case SlowVariationModel::Family::constant:
      return 1.0;
    case SlowVariationModel::Family::log_power:
      return std::pow(-std::log(h), m.gamma_log);
    case SlowVariationModel::Family::loglog_power:
      return std::pow(std::abs(std::log(-std::log(h))), m.gamma_loglog);
    case SlowVariationModel::Family::product:
      return std::pow(-std::log(h), m.gamma_log) *
             std::pow(std::abs(std::log(-std::log(h))), m.gamma_loglog);
  }
  return 1.0;
}

}  // namespace

SlowVariationModel SlowVariationModel::constant(Locus locus) {
  SlowVariationModel m;
  m.family = Family::constant;
  m.locus = locus;
  return m;
}

SlowVariationModel SlowVariationModel::log_power(Real gamma, Locus locus) {
  SlowVariationModel m;
  m.family = Family::log_power;
  m.gamma_log = gamma;
  m.locus = locus;
  return m;
}

SlowVariationModel SlowVariationModel::loglog_power(Real gamma, Locus locus) {
  SlowVariationModel m;
  m.family = Family::loglog_power;
  m.gamma_loglog = gamma;
  m.locus = locus;
  return m;
}

SlowVariationModel SlowVariationModel::product(Real gamma_log, Real gamma_loglog,
                                               Locus locus) {
  SlowVariationModel m;
  m.family = Family::product;
  m.gamma_log = gamma_log;
  m.gamma_loglog = gamma_loglog;
  m.locus = locus;
  return m;
}

Real SlowVariationModel::domain_edge() const {
  // |log h| vanishes at h = 1 and |log|log h|| at h = 1/e; stay clear of both.
  switch (family) {
    case Family::constant:
      return 1.0;
    case Family::log_power:
      return 1.0;
    case Family::loglog_power:
    case Family::product:
      return std::exp(-1.0);
  }
  return 1.0;
}

bool SlowVariationModel::in_domain(Real h) const {
  if (!(h > 0) || !std::isfinite(h)) return false;
  const Real x = to_origin(locus, h);
  if (family == Family::constant) return true;
  return x < domain_edge();
}

std::string SlowVariationModel::describe() const {
  const char* side = locus == Locus::origin ? "0" : "inf";
  switch (family) {
    case Family::constant:
      return "1";
    case Family::log_power:
      return "|log h|^" + std::to_string(gamma_log) + " (at " + side + ")";
    case Family::loglog_power:
      return "|log|log h||^" + std::to_string(gamma_loglog) + " (at " + side + ")";
    case Family::product:
      return "|log h|^" + std::to_string(gamma_log) + " |log|log h||^" +
             std::to_string(gamma_loglog) + " (at " + side + ")";
  }
  return "?";
}

Real eval_sv(const SlowVariationModel& model, Real h) {
  if (!model.in_domain(h))
    throw validation_error("eval_sv: h = " + std::to_string(h) +
                           " outside the domain of " + model.describe());
  return eval_origin(model, to_origin(model.locus, h));
}

PotterReport potter_check(const SlowVariationModel& model, Real delta,
                          const ArrayXd& grid) {
  if (grid.size() == 0) throw validation_error("potter_check: empty grid");
  if (!(delta >= 0)) throw validation_error("potter_check: delta must be >= 0");

  auto scan = [&](const ArrayXd& g) {
    PotterReport r;
    for (int i = 0; i < g.size(); ++i) {
      const Real h = g[i];
      const Real Lh = eval_sv(model, h);
      for (int j = 0; j < g.size(); ++j) {
        const Real hr = g[j];
        const Real ratio_arg = model.locus == Locus::origin ? hr / h : hr / h;
        const Real r_pow =
            delta > 0 ? std::max(std::pow(ratio_arg, delta), std::pow(ratio_arg, -delta))
                      : 1.0;
        const Real ratio = eval_sv(model, hr) / Lh;
        const Real c = ratio / r_pow;
        if (c > r.C) {
          r.C = c;
          r.worst_ratio = ratio;
          r.worst_h = h;
          r.worst_hr = hr;
        }
      }
    }
    return r;
  };

  PotterReport base = scan(grid);
  // Refine: double the density over the same span.
  ArrayXd fine = log_spaced(grid.minCoeff(), grid.maxCoeff(),
                            static_cast<int>(grid.size()) * 2 - 1);
  PotterReport refined = scan(fine);
  base.pass = std::isfinite(refined.C) && refined.C <= base.C * 1.25 + 1e-12;
  base.C = std::max(base.C, refined.C);
  if (delta == 0.0 && model.family != SlowVariationModel::Family::constant)
    base.pass = false;  // no cushion: the log families are unbounded
  return base;
}

Real sv_log_integral(const SlowVariationModel& model, Real h) {
  if (!model.in_domain(h))
    throw validation_error("sv_log_integral: h outside domain");
  const Real x = to_origin(model.locus, h);
  const Real sign = model.locus == Locus::origin ? 1.0 : -1.0;
  switch (model.family) {
    case SlowVariationModel::Family::constant:
      return sign * std::log(x);
    case SlowVariationModel::Family::log_power: {
      // int_1^x (-log t)^g dt/t = -(-log x)^{g+1}/(g+1)
      const Real g = model.gamma_log;
      return sign * (-std::pow(-std::log(x), g + 1.0) / (g + 1.0));
    }
    default: {
      // Quadrature in s = -log t over [0, -log x].
      const Real upper = -std::log(x);
      auto f = [&](Real s) -> Complex {
        return eval_origin(model, std::exp(-s));
      };
      return sign * -quad::integrate(f, 0.0, upper, 1e-10).value.real();
    }
  }
}

Complex DriftFunction::eval(Real h) const {
  return base + slope * sv_log_integral(model, h);
}

SubmultiplicativeIndex submultiplicative_index(
    const std::vector<std::pair<Real, Real>>& samples) {
  for (const auto& [t, R] : samples)
    if (!(t > 0) || !(R > 0))
      throw validation_error("submultiplicative_index: samples must be positive");

  auto slope = [](const std::vector<std::pair<Real, Real>>& pts) {
    // OLS of log R on log t.
    Real sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [t, R] : pts) {
      const Real x = std::log(t), y = std::log(R);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    const Real n = static_cast<Real>(pts.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  };

  std::vector<std::pair<Real, Real>> lo, hi;
  for (const auto& s : samples) (s.first < 1.0 ? lo : hi).push_back(s);

  SubmultiplicativeIndex out;
  if (lo.size() >= 2) {
    out.has_origin = true;
    out.alpha = slope(lo);
  }
  if (hi.size() >= 2) {
    out.has_infinity = true;
    out.beta = slope(hi);
  }
  if (!out.has_origin && !out.has_infinity)
    throw validation_error("submultiplicative_index: need samples on at least one side of t = 1");
  return out;
}

}  // namespace asco
