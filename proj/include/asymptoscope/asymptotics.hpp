#ifndef ASYMPTOSCOPE_ASYMPTOTICS_HPP
#define ASYMPTOSCOPE_ASYMPTOTICS_HPP

#include <string>
#include <vector>

#include "asymptoscope/types.hpp"

namespace asco {

/// Where a slowly varying model is anchored.
enum class Locus { origin, infinity };

/// Karamata slowly varying function drawn from the closed-form menu
///   1,  |log h|^gamma,  |log|log h||^gamma,  and the product of the last two.
/// Internally everything lives at the origin; the infinity locus is handled
/// by the substitution h -> 1/h.
struct SlowVariationModel {
  enum class Family { constant, log_power, loglog_power, product };

  Family family = Family::constant;
  Real gamma_log = 0.0;     // exponent on |log h|
  Real gamma_loglog = 0.0;  // exponent on |log|log h||
  Locus locus = Locus::origin;

  static SlowVariationModel constant(Locus locus = Locus::origin);
  static SlowVariationModel log_power(Real gamma, Locus locus = Locus::origin);
  static SlowVariationModel loglog_power(Real gamma, Locus locus = Locus::origin);
  static SlowVariationModel product(Real gamma_log, Real gamma_loglog,
                                    Locus locus = Locus::origin);

  /// Open domain end nearest 1: log families vanish there and are excluded.
  Real domain_edge() const;
  bool in_domain(Real h) const;
  std::string describe() const;
};

Real eval_sv(const SlowVariationModel& model, Real h);

struct PotterReport {
  Real C = 0.0;         // smallest admissible constant on the grid
  Real worst_ratio = 0.0;
  Real worst_h = 0.0, worst_hr = 0.0;
  bool pass = false;    // C finite and stable under grid refinement
};

/// Checks L(hr)/L(h) <= C max(r^delta, r^-delta) over all grid pairs.
PotterReport potter_check(const SlowVariationModel& model, Real delta,
                          const ArrayXd& grid);

/// Drift c(h) = base + v * int_1^h L(t) dt/t, the log-correction term that
/// appears at integer degrees.
struct DriftFunction {
  Complex base = 0.0;
  Complex slope = 0.0;  // the vector v
  SlowVariationModel model;

  Complex eval(Real h) const;
};

/// Integral int_1^h L(t) dt/t for the built-in families (closed form where
/// available, quadrature otherwise).
Real sv_log_integral(const SlowVariationModel& model, Real h);

struct SubmultiplicativeIndex {
  bool has_origin = false, has_infinity = false;
  Real alpha = 0.0;  // log R(eps)/log eps limit at the origin
  Real beta = 0.0;   // same limit at infinity
};

/// Regression estimate of the two growth indices of a submultiplicative
/// envelope from samples (t, R(t)), split at t = 1.
SubmultiplicativeIndex submultiplicative_index(
    const std::vector<std::pair<Real, Real>>& samples);

}  // namespace asco

#endif  // ASYMPTOSCOPE_ASYMPTOTICS_HPP
