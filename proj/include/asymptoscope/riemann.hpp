#ifndef ASYMPTOSCOPE_RIEMANN_HPP
#define ASYMPTOSCOPE_RIEMANN_HPP

#include <optional>
#include <string>
#include <vector>

#include "asymptoscope/kernels.hpp"
#include "asymptoscope/types.hpp"

namespace asco {

/// Generators of the theta group acting on the rationals:
/// K2 : r -> r + 2,  K2inv : r -> r - 2,  U : r -> -1/r.
enum class ThetaLetter { K2, K2inv, U };

struct ThetaWord {
  std::vector<ThetaLetter> letters;  // applied left to right to the base point
};

enum class ParityClass { S0, S1 };  // S0 = orbit of 0, S1 = orbit of 1

struct RationalPoint {
  long long p = 0;
  long long q = 1;  // reduced, q >= 1
  ParityClass parity = ParityClass::S0;
  ThetaWord word;   // maps the base point (0 for S0, 1 for S1) to p/q

  std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }
  Real value() const { return static_cast<Real>(p) / static_cast<Real>(q); }
};

/// Reduces p/q, assigns the parity class and builds the theta word by greedy
/// reduction (translate into (-1, 1], then invert).
RationalPoint classify_rational(long long p, long long q);

/// Applies a theta word to a base rational in exact arithmetic.
std::pair<long long, long long> apply_theta_word(const ThetaWord& word,
                                                 long long p0, long long q0);

struct PConstant {
  Complex value;
  bool defined;  // false on S1 (the constant is definitionally absent)
};

/// Fold of p_0 = 1, p_{K^2 r} = p_r, p_{U r} = sqrt(-i/r) p_r along the theta
/// word, cross-checked against the exact Gauss mean.
PConstant p_constant(const RationalPoint& r);

/// Mean of e^{i pi r n^2} over one exact period (equals lim (1/N) sum).
Complex gauss_mean(const RationalPoint& r);

struct GammaConstant {
  Complex value;
  Real error_estimate;
};

/// gamma_r = lim_N ( sum_{n<=N} e^{i pi r n^2}/n - p_r log N ), by partial
/// sums at period multiples with Richardson extrapolation.
GammaConstant gamma_constant(const RationalPoint& r);

enum class ZetaMethod { direct, cesaro, pole_subtracted };

struct ZetaEvaluation {
  RationalPoint r;
  Complex z;
  Complex value;
  ZetaMethod method = ZetaMethod::direct;
  int cesaro_order = 0;  // Riesz/Cesaro order used, when applicable
  Real error_estimate = 0.0;
};

/// zeta_r(z) = sum e^{i pi r n^2} / n^z.
///   direct          Re z > 1, residue-class partial sums with tail correction
///   cesaro          Re z > -3, Riesz means of the drift-subtracted sums
///   pole_subtracted the entire function A_r(z) = zeta_r(z) - p_r/(z-1)
ZetaEvaluation zeta_r(const RationalPoint& r, Complex z, ZetaMethod method);

struct ExpansionCoefficients {
  RationalPoint r;
  Complex beta;
  Complex singular_coefficient = 0.0;  // of (eps t + i0)^{beta - 1/2}, S0 only
  bool has_log_term = false;           // beta = 1/2 structure
  Complex log_coefficient = 0.0;       // of -log(eps|t|/pi), equals p_r/2
  Complex constant_term = 0.0;         // gamma_r + (p_r/2)(-gamma) grouping
  Complex constant_term_b = 0.0;       // alternative grouping (p_r/2) log pi + gamma_r
  std::vector<Complex> taylor;         // zeta_r(2 beta - 2m) (i pi)^m / m!
  Complex p_r = 0.0;
  Complex gamma_r = 0.0;
};

/// Weak-asymptotic expansion of R_beta at the rational r, Taylor part through
/// order M-1.
ExpansionCoefficients weak_expansion(const RationalPoint& r, Complex beta, int M);

struct ExpansionVerification {
  ArrayXd eps;
  ArrayXd residual;     // |pairing - truncated expansion applied to the test|
  Real decay_order;     // floor-aware log-log slope
  Real threshold;       // min(M-dependent prediction, 6)
  bool pass;
};

ExpansionVerification verify_expansion(const RationalPoint& r, Complex beta,
                                       const KernelSpec& test, const ArrayXd& eps_grid,
                                       int M);

/// Floor-aware slope of log value vs log eps: points below the per-point
/// noise floor are dropped; if fewer than three survive, the endpoint slope
/// against the floor is used instead.
Real decay_slope(const ArrayXd& eps, const ArrayXd& value, const ArrayXd& floors);

/// Gamma function for complex arguments (Lanczos).
Complex complex_gamma(Complex z);

}  // namespace asco

#endif  // ASYMPTOSCOPE_RIEMANN_HPP
