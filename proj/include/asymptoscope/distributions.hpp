#ifndef ASYMPTOSCOPE_DISTRIBUTIONS_HPP
#define ASYMPTOSCOPE_DISTRIBUTIONS_HPP

#include <string>
#include <variant>
#include <vector>

#include "asymptoscope/types.hpp"

namespace asco {

/// f given through an atomic Fourier spectrum f_hat = sum_n c_n delta(. - w_n),
/// so that f(t) = (1/2pi) sum_n c_n e^{i w_n t}.
struct AtomicSpectrum {
  ArrayXd frequencies;   // w_n, any order; evaluation sorts by kernel reach
  ArrayXcd amplitudes;   // c_n
  Real growth_q = 0.0;   // temperedness metadata: |c_n| <= C (1+|w_n|)^q
  bool truncated = false;  // true when the array truncates an infinite series;
                           // transforms then certify the remainder
  std::string label;
};

enum class Boundary { periodic, zero_pad };

/// Uniformly sampled signal; transforms treat it as the trigonometric
/// polynomial obtained from its DFT (periodic) or from the zero-padded DFT.
struct SampledSignal {
  std::vector<ArrayXcd> channels;  // at least one
  Real spacing = 1.0;
  Real origin = 0.0;
  Boundary boundary = Boundary::periodic;
  std::string label;
};

/// f(t) = (c_plus t_+^a + c_minus t_-^a) (1 + |log|t||)^g.  The pure model
/// (g = 0) spans the boundary values (t +- i0)^a for non-integer a; the log
/// modulation supplies the slowly varying synthetic fits.  Needs a > -1.
struct HomogeneousModel {
  Real degree = 0.0;
  Complex coeff_plus = 1.0;
  Complex coeff_minus = 0.0;
  Real log_power = 0.0;
  std::string label;
};

using SpectralDistribution = std::variant<AtomicSpectrum, SampledSignal, HomogeneousModel>;

const std::string& distribution_label(const SpectralDistribution& f);

// Built-in generators -------------------------------------------------------

/// sum_{j>=1} a^j sin(2^j t), 0 < a < 1.
AtomicSpectrum weierstrass(Real a, int j_max = 160);

/// w(t) = sum sin(pi t n^2)/n^2, the classical Riemann example.
AtomicSpectrum riemann_w(int n_max = 4000);

/// R_beta(t) = sum_{n>=1} n^{-2 beta} e^{i pi n^2 t}.
AtomicSpectrum r_beta(Complex beta, int n_max = 4000);

/// theta(t) = 1 + 2 sum e^{i pi n^2 t} (boundary value of the Jacobi theta).
AtomicSpectrum theta_comb(int n_max = 4000);

/// Constant distribution f = c.
AtomicSpectrum constant_signal(Complex c);

/// Single frequency e^{i w t}.
AtomicSpectrum atom(Real omega, Complex amplitude = 1.0);

/// cos t as two atoms.
AtomicSpectrum cosine();

/// Flat-spectrum approximation of delta: atoms of weight d_omega on a uniform
/// grid of [-band, band].
AtomicSpectrum delta_flat(Real band = 200.0, Real d_omega = 0.05);

HomogeneousModel heaviside();
HomogeneousModel abs_power(Real alpha);                 // |t|^alpha
HomogeneousModel abs_power_log(Real alpha, Real gamma); // |t|^alpha (1+|log|t||)^gamma
HomogeneousModel boundary_power(Real alpha, bool upper);// (t +- i0)^alpha

/// Parses generator syntax used by the CLI: weierstrass:0.6, riemann_w,
/// r_beta:1/3:1.0, heaviside, homogeneous:0.5, theta, constant:1, atom:2.5.
SpectralDistribution make_distribution(const std::string& name);

}  // namespace asco

#endif  // ASYMPTOSCOPE_DISTRIBUTIONS_HPP
