#ifndef ASYMPTOSCOPE_SUMMABILITY_HPP
#define ASYMPTOSCOPE_SUMMABILITY_HPP

#include <functional>
#include <string>
#include <vector>

#include "asymptoscope/distributions.hpp"
#include "asymptoscope/types.hpp"

namespace asco {

/// Coefficient stream c_0, c_1, ... with declared slow-growth metadata
/// |c_n| <= C n^growth (certification is declared, not inferred).
struct CoefficientStream {
  std::function<Complex(long long)> c;
  Real growth = 0.0;
  std::string label;
};

/// (rho)-summability kernel: rho(0) = 1, rapidly decreasing on [0, inf).
struct SummabilityKernel {
  std::function<Real(Real)> rho;
  std::string name;        // abel | lambert | custom
  Real decay_power = 0.0;  // 0 marks exponential decay; else |rho(u)| <= C u^-p

  static SummabilityKernel abel();
  static SummabilityKernel lambert();
  static SummabilityKernel custom(std::function<Real(Real)> rho, Real decay_power);

  void validate() const;  // rho(0) = 1 and the decay proxy at u in {10, 100}
};

/// sum_{n>=0} c_n rho(y n) with certified truncation.
Complex rho_sum(const CoefficientStream& coeffs, const SummabilityKernel& kernel, Real y);

struct AbelLimit {
  Complex beta;
  bool converged;
  Real error_estimate;
};

/// Extrapolates rho_sum with the Abel kernel along a decreasing y grid.
AbelLimit abel_limit(const CoefficientStream& coeffs, const ArrayXd& y_grid);

/// k-fold iterated arithmetic means of a sequence (k = 0 is the identity).
std::vector<Complex> cesaro_mean(const std::vector<Complex>& partial_sums, int k);

struct LittlewoodReport {
  Complex abel_value;
  bool abel_matches;       // (a) Abel limit equals the claimed beta
  Real tauberian_constant; // measured sup n |c_n|
  bool tauberian_ok;       // (b) c_n = O(1/n)
  bool partial_sums_converge;  // (c)
  Complex partial_sum_value;
  bool all_pass() const { return abel_matches && tauberian_ok && partial_sums_converge; }
};

LittlewoodReport littlewood_check(const CoefficientStream& coeffs, Complex claimed_beta);

struct LaplaceProfile {
  ArrayXd eps;
  ArrayXd S;        // sup over the Omega^kappa boundary
  Real kappa = 0.0;
  int k = 0;
};

/// Laplace Tauberian profile on the boundary of Omega^kappa:
///   S(eps) = sup sigma^k eps^{1+alpha} |L{h; eps(x + i sigma omega)}| / L(1/eps).
/// h must be supported on [0, inf).
LaplaceProfile laplace_profile(const SpectralDistribution& h, Real omega, Real kappa,
                               int k, Real alpha, const ArrayXd& eps_grid);

/// The Laplace transform L{h; z} itself, Im z > 0.
Complex laplace_transform(const SpectralDistribution& h, Complex z);

}  // namespace asco

#endif  // ASYMPTOSCOPE_SUMMABILITY_HPP
