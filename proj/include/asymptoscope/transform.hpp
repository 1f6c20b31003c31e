#ifndef ASYMPTOSCOPE_TRANSFORM_HPP
#define ASYMPTOSCOPE_TRANSFORM_HPP

#include <iosfwd>
#include <vector>

#include "asymptoscope/distributions.hpp"
#include "asymptoscope/kernels.hpp"
#include "asymptoscope/types.hpp"

namespace asco {

/// Which regularizing-transform convention a field was computed under:
///   plain    M_phi f (x,y)  = (f * phi_y)(x)
///   phi      F_phi f (x,y)  = <f(x+yt), phi(t)>
///   wavelet  W_psi f (x,y)  = <f(x+yt), conj(psi)(t)>
enum class Convention { plain, phi, wavelet };

Convention default_convention(const KernelSpec& kernel);
const char* convention_name(Convention c);

struct ScaleGrid {
  ArrayXd x;
  ArrayXd y;  // strictly positive, sorted ascending

  void validate() const;
};

struct TransformField {
  std::vector<ArrayXXcd> channels;  // each ny x nx
  ScaleGrid grid;
  std::string kernel_label;
  std::string distribution_label;
  Convention convention = Convention::phi;
  std::vector<std::string> warnings;

  const ArrayXXcd& values() const { return channels.at(0); }
  /// Max-norm over channels at a grid node.
  Real norm_at(int iy, int ix) const;
};

/// Evaluates the chosen transform of f over the grid.
TransformField analyze(const SpectralDistribution& f, const KernelSpec& kernel,
                       const ScaleGrid& grid, Convention convention);

/// Single-point transform value (channel selectable for sampled signals).
Complex point_value(const SpectralDistribution& f, const KernelSpec& kernel,
                    Real x, Real y, Convention convention, int channel = 0);

/// <f(x0 + eps t), test(t)>; the phi-convention point value.
Complex point_evaluate(const SpectralDistribution& f, Real x0, Real eps,
                       const KernelSpec& test, int channel = 0);

/// Distributional pairing <f, rho>.
Complex pairing(const SpectralDistribution& f, const KernelSpec& rho, int channel = 0);

/// Wavelet synthesis M_eta Phi(t) over the field's own grid.
ArrayXcd synthesize(const TransformField& field, const KernelSpec& eta,
                    const ArrayXd& t_values, Real tol = 2e-3);

struct DesingularizeResult {
  Complex value;
  Real error_estimate;
};

/// (1/c_{psi,eta}) iint W_psi f . W_{conj(eta)} rho dx dy / y  =  <f, rho>.
DesingularizeResult desingularize(const SpectralDistribution& f, const KernelSpec& psi,
                                  const KernelSpec& eta, const KernelSpec& rho,
                                  int channel = 0);

/// F_{phi_1} f(x, b) + int_0^b W_{psi_1} f(x, r) dr/r with the lp_pair kernels.
Complex littlewood_paley_reconstruct(const SpectralDistribution& f, Real x, Real b,
                                     int channel = 0);

/// Heat-type Cauchy evolution U(x, t) = F_phi f(x, t^{1/d}); d = 2 supported.
Complex evolve_cauchy(const SpectralDistribution& f, int d, Real x, Real t,
                      int channel = 0);

/// Columnar text dump: x y re im (one row per node, channel 0).
void write_columnar(const TransformField& field, std::ostream& os);

}  // namespace asco

#endif  // ASYMPTOSCOPE_TRANSFORM_HPP
