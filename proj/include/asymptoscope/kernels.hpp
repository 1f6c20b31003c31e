#ifndef ASYMPTOSCOPE_KERNELS_HPP
#define ASYMPTOSCOPE_KERNELS_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>

#include "asymptoscope/types.hpp"

namespace asco {

/// How many moments are declared to vanish.  kAllMoments marks Lizorkin
/// kernels (Fourier transform flat at the origin).
inline constexpr int kAllMoments = -1;

enum class KernelSymmetry { even, none };

/// A test function given by its Fourier-side evaluator phi_hat(u).
/// Time-side values come from a cached inverse transform; analytic overrides
/// are installed for the atlas entries that have one.
class KernelSpec {
 public:
  KernelSpec(std::function<Complex(Real)> fourier_eval, int declared_vanishing_order,
             KernelSymmetry symmetry, std::string label,
             std::optional<std::pair<Real, Real>> support_hint = std::nullopt);

  Complex fourier(Real u) const { return fourier_eval_(u); }
  Real time(Real t) const;  ///< phi(t), real for even real-valued phi_hat

  int declared_vanishing_order() const { return vanishing_order_; }
  bool is_wavelet() const { return vanishing_order_ == kAllMoments || vanishing_order_ >= 1; }
  bool is_lizorkin() const { return vanishing_order_ == kAllMoments; }
  KernelSymmetry symmetry() const { return symmetry_; }
  const std::string& label() const { return label_; }
  const std::optional<std::pair<Real, Real>>& support_hint() const { return support_hint_; }

  /// Installs a closed-form time-side evaluator (atlas entries).
  void set_analytic_time(std::function<Real(Real)> f) { analytic_time_ = std::move(f); }

  /// Radius beyond which |phi(t)| is below the cache floor.
  Real time_cutoff() const;

 private:
  struct TimeCache;
  const TimeCache& cache() const;

  std::function<Complex(Real)> fourier_eval_;
  int vanishing_order_;
  KernelSymmetry symmetry_;
  std::string label_;
  std::optional<std::pair<Real, Real>> support_hint_;
  std::function<Real(Real)> analytic_time_;
  mutable std::shared_ptr<TimeCache> time_cache_;
};

/// Named built-ins addressable from the CLI:
///   gaussian               phi_hat(u) = e^{-u^2}
///   heat                   phi_hat(-u) = e^{-u} for u >= 0 (one-sided exponential)
///   lizorkin_exp           psi_hat(u) = e^{-|u| - 1/|u|}
///   shifted_lizorkin:t     psi_hat(u) = e^{-|u| - 1/(|u|-t)} for |u| > t, else 0
///   lp_phi / lp_psi        the Littlewood-Paley cutoff pair
///   gauss_power:N          psi_hat(u) = u^N e^{-u^2}, N even
KernelSpec make_kernel(const std::string& name);

KernelSpec lp_pair_phi();
KernelSpec lp_pair_psi();

/// mu_m = i^m (d^m phi_hat/du^m)(0) by high-order central differences with
/// Richardson step halving.  Odd moments of even kernels are exactly 0.
Complex moment(const KernelSpec& kernel, int m);

struct NondegeneracyReport {
  bool verdict = false;
  Real witness_plus = 0.0;   // max |phi_hat| on the positive ray
  Real witness_minus = 0.0;  // same on the negative ray
};

NondegeneracyReport is_nondegenerate(const KernelSpec& kernel,
                                     const ArrayXd& radial_grid);
NondegeneracyReport is_nondegenerate(const KernelSpec& kernel);

struct NondegeneracyIndex {
  Real tau = 0.0;
  Real resolution = 0.0;  // grid resolution the edge was located at
};

/// Index of non-degenerateness: the largest left support edge of phi_hat
/// over the two directions, located to the reported resolution.
NondegeneracyIndex nondegeneracy_index(const KernelSpec& kernel);

struct StrongNondegeneracy {
  int N = 0;
  Real r = 0.0;
  Real C = 0.0;
};

/// Smallest N <= 12 with C|u|^N <= |phi_hat(u)| on |u| <= 0.5, if any.
std::optional<StrongNondegeneracy> strong_nondegeneracy(const KernelSpec& kernel);

/// c_{psi,eta}(omega) = int_0^inf conj(psi_hat(r w)) eta_hat(r w) dr/r.
Complex calibration_constant(const KernelSpec& psi, const KernelSpec& eta,
                             int direction, Real abs_tol = 1e-13);

/// eta with eta_hat(u) = psi_hat(u)/c_{psi,psi}(sgn u), so c_{psi,eta} = 1.
KernelSpec make_reconstruction_wavelet(const KernelSpec& psi);

}  // namespace asco

#endif  // ASYMPTOSCOPE_KERNELS_HPP
