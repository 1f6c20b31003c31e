#ifndef ASYMPTOSCOPE_TAUBERIAN_HPP
#define ASYMPTOSCOPE_TAUBERIAN_HPP

#include <optional>
#include <vector>

#include "asymptoscope/asymptotics.hpp"
#include "asymptoscope/distributions.hpp"
#include "asymptoscope/kernels.hpp"
#include "asymptoscope/transform.hpp"

namespace asco {

/// S(eps) = sup over a unit-scale boundary set of y^k ||M(x0 + eps x, eps y)||.
struct TauberianProfile {
  ArrayXd eps;
  ArrayXd S;
  int k = 0;
  Real x0 = 0.0;
};

/// Points (x, y) of unit scale over which profile sups are taken.
std::vector<std::pair<Real, Real>> half_circle_points(int angle_count);
std::vector<std::pair<Real, Real>> omega_boundary_points(Real kappa, int count);

TauberianProfile tauberian_profile(const SpectralDistribution& f, const KernelSpec& kernel,
                                   Real x0, int k, const ArrayXd& eps_grid,
                                   int angle_count = 128);

/// Same sup over an arbitrary boundary point set (used for the Omega^kappa
/// equivalence checks).
TauberianProfile boundary_profile(const SpectralDistribution& f, const KernelSpec& kernel,
                                  Real x0, int k, const ArrayXd& eps_grid,
                                  const std::vector<std::pair<Real, Real>>& points);

enum class Classification { cusp, oscillating, undetermined };

struct SweepEntry {
  int k = 0;
  bool bounded = false;
  Real alpha = 0.0;
  SlowVariationModel L;
  Real residual = 0.0;
};

struct ExponentReport {
  Real alpha = 0.0;
  SlowVariationModel L_model;
  int k = 0;
  Real residual = 0.0;
  std::optional<DriftFunction> drift;          // integer-degree refit
  std::vector<Complex> polynomial_correction;  // recorded, not fitted
  Classification classification = Classification::undetermined;
  std::optional<Real> holder_alpha;
  std::vector<SweepEntry> sweep;               // one entry per tested k
  bool unbounded_at_kmax = false;
  bool moment_condition_ok = true;  // kernel moments vanish through floor(alpha)
};

struct ExponentOptions {
  Real eps_lo = 1e-4;
  Real eps_hi = 1.0;
  int n_eps = 64;
  int angles = 128;
  int k_max = 8;
  Locus locus = Locus::origin;  // infinity swaps eps for lambda in [1, 1/eps_lo]
};

ExponentReport estimate_weak_exponent(const SpectralDistribution& f, const KernelSpec& kernel,
                                      Real x0, const ExponentOptions& options = {});

struct ArcLimit {
  Real x = 0.0, y = 0.0;       // arc point
  Complex limit = 0.0;
  bool diverged = false;
  Real residual = 0.0;
};

struct AngularLimits {
  std::vector<ArcLimit> points;
  Real uniformity_defect = 0.0;
};

/// lim M(x0 + h x, h y)/(h^alpha L(h)) on the reference arc, extrapolated
/// over the last decade of the eps grid.
AngularLimits angular_limit(const SpectralDistribution& f, const KernelSpec& kernel,
                            Real x0, Real alpha, const SlowVariationModel& L,
                            Real cone_half_angle, const ArrayXd& eps_grid);

enum class EstimateScope { global, local };

struct ClassEstimateReport {
  int k = 0, l = 0;
  Real C = 0.0;
  EstimateScope scope = EstimateScope::global;
  Real max_violation = 0.0;  // <= 0 when the estimate passes
  bool found = false;
};

ClassEstimateReport class_estimate_fit(const SpectralDistribution& f, const KernelSpec& kernel,
                                       EstimateScope scope, Real x_extent = 8.0,
                                       Real y_lo = 1e-3);

ExponentReport holder_exponent(const SpectralDistribution& f, const KernelSpec& kernel,
                               Real x0);

struct GlobalHolderReport {
  bool pass = false;
  Real C = 0.0;
  Real worst_x = 0.0, worst_y = 0.0;
};

/// Verifies sup_x |W_psi f(x, y)| <= C y^alpha L(y) on (0, y0].
GlobalHolderReport global_holder_check(const SpectralDistribution& f, const KernelSpec& kernel,
                                       Real alpha, const SlowVariationModel& L, Real y0);

struct StabilizationReport {
  bool stabilizes = false;
  Real alpha = 0.0;
  SlowVariationModel L;          // slowly varying factor at infinity
  Real T_power = 0.0;            // T(t) = t^{T_power} L(t^{1/d})
  std::vector<ArcLimit> ell;     // ell(x) per requested x
};

/// Heat-type stabilization: tests weak-asymptotics of f at infinity through
/// the d-curve profile of U(x, t) = F_phi f(x, t^{1/d}), then reports
/// ell(x) = lim U(x, t)/T(t).
StabilizationReport stabilization_check(const SpectralDistribution& f, int d,
                                        const ArrayXd& xs);

}  // namespace asco

#endif  // ASYMPTOSCOPE_TAUBERIAN_HPP
