#include "asymptoscope/summability.hpp"

#include <algorithm>
#include <cmath>

#include "asymptoscope/quadrature.hpp"
#include "asymptoscope/riemann.hpp"

namespace asco {

SummabilityKernel SummabilityKernel::abel() {
  SummabilityKernel k;
  k.rho = [](Real u) { return std::exp(-u); };
  k.name = "abel";
  return k;
}

SummabilityKernel SummabilityKernel::lambert() {
  SummabilityKernel k;
  k.rho = [](Real u) {
    if (u < 1e-4) return 1.0 - u / 2.0 + u * u / 12.0;  // series, avoids cancellation
    if (u > 700.0) return 0.0;
    return u / std::expm1(u);
  };
  k.name = "lambert";
  return k;
}

SummabilityKernel SummabilityKernel::custom(std::function<Real(Real)> rho,
                                            Real decay_power) {
  SummabilityKernel k;
  k.rho = std::move(rho);
  k.name = "custom";
  k.decay_power = decay_power;
  return k;
}

void SummabilityKernel::validate() const {
  if (std::abs(rho(0.0) - 1.0) > 1e-12)
    throw validation_error("summability kernel: rho(0) must be 1");
  for (Real u : {10.0, 100.0}) {
    if (std::abs(rho(u)) > 1.0 / ((1.0 + u) * (1.0 + u) * (1.0 + u)))
      throw validation_error("summability kernel: decay proxy |rho(u)| <= (1+u)^-3 fails");
  }
}

Complex rho_sum(const CoefficientStream& coeffs, const SummabilityKernel& kernel, Real y) {
  if (!(y > 0)) throw validation_error("rho_sum: y must be positive");
  kernel.validate();
  if (kernel.decay_power > 0 && kernel.decay_power <= coeffs.growth + 1.0)
    throw validation_error("rho_sum: kernel decay incompatible with coefficient growth");
  const Complex c0 = coeffs.c(0) * kernel.rho(0.0);
  Complex s = c0;
  Real scale = std::abs(c0);
  int quiet = 0;
  const long long cap = 200'000'000;
  for (long long n = 1; n < cap; ++n) {
    const Complex term = coeffs.c(n) * kernel.rho(y * n);
    s += term;
    scale += std::abs(term);
    const bool past_shoulder = y * static_cast<Real>(n) > 4.0;
    if (past_shoulder && std::abs(term) < 1e-17 * (scale + 1.0)) {
      if (++quiet >= 8) return s;
    } else {
      quiet = 0;
    }
  }
  throw numerical_error("rho_sum: truncation cap reached");
}

AbelLimit abel_limit(const CoefficientStream& coeffs, const ArrayXd& y_grid) {
  for (int i = 1; i < y_grid.size(); ++i)
    if (!(y_grid[i] < y_grid[i - 1]))
      throw validation_error("abel_limit: y grid must decrease to 0");
  const SummabilityKernel abel = SummabilityKernel::abel();
  std::vector<Complex> v(y_grid.size());
  for (int i = 0; i < y_grid.size(); ++i) v[i] = rho_sum(coeffs, abel, y_grid[i]);

  // Divergence screen: values racing off along the grid.
  Real vmax = 0.0, vend = std::abs(v.back());
  for (const auto& z : v) vmax = std::max(vmax, std::abs(z));
  if (vend > 100.0 * (std::abs(v.front()) + 1.0))
    return {v.back(), false, std::abs(v.back() - v[v.size() - 2])};

  // Richardson in y (error model beta + c1 y + c2 y^2 ...), assuming a
  // roughly geometric grid.
  std::vector<Complex> row = v;
  Complex prev = row.back();
  int lev = 1;
  while (row.size() > 1 && lev <= 3) {
    std::vector<Complex> next(row.size() - 1);
    for (size_t i = 0; i + 1 < row.size(); ++i) {
      const Real ratio = y_grid[static_cast<int>(i)] / y_grid[static_cast<int>(i) + 1];
      const Real f = std::pow(ratio, lev);
      next[i] = (f * row[i + 1] - row[i]) / (f - 1.0);
    }
    prev = row.back();
    row.swap(next);
    ++lev;
  }
  const Complex value = row.back();
  const Real err = std::abs(value - prev);
  return {value, err < 1e-6, err};
}

std::vector<Complex> cesaro_mean(const std::vector<Complex>& partial_sums, int k) {
  if (partial_sums.empty()) throw validation_error("cesaro_mean: empty input");
  if (k < 0 || k > 4) throw validation_error("cesaro_mean: order must be 0..4");
  std::vector<Complex> cur = partial_sums;
  for (int level = 0; level < k; ++level) {
    Complex acc = 0.0;
    for (size_t n = 0; n < cur.size(); ++n) {
      acc += cur[n];
      cur[n] = acc / static_cast<Real>(n + 1);
    }
  }
  return cur;
}

LittlewoodReport littlewood_check(const CoefficientStream& coeffs, Complex claimed_beta) {
  LittlewoodReport rep;

  const ArrayXd ys = log_spaced(2e-4, 0.25, 12).reverse();
  const AbelLimit abel = abel_limit(coeffs, ys);
  rep.abel_value = abel.beta;
  rep.abel_matches = abel.converged && std::abs(abel.beta - claimed_beta) < 1e-5;

  // Tauberian constant sup n |c_n| with a growth screen over dyadic windows.
  const long long N = 1 << 18;
  Real sup_all = 0.0, sup_last = 0.0, sup_prev = 0.0;
  for (long long n = 1; n <= N; ++n) {
    const Real v = static_cast<Real>(n) * std::abs(coeffs.c(n));
    sup_all = std::max(sup_all, v);
    if (n > N / 2) sup_last = std::max(sup_last, v);
    else if (n > N / 4) sup_prev = std::max(sup_prev, v);
  }
  rep.tauberian_constant = sup_all;
  rep.tauberian_ok = sup_last <= std::max(1.5 * sup_prev, 0.5 * sup_all) + 1e-12;

  // Partial-sum convergence: oscillation over the last dyadic window.
  Complex s = coeffs.c(0);
  Complex at_half = 0.0;
  Real osc = 0.0;
  Complex ref = 0.0;
  for (long long n = 1; n <= N; ++n) {
    s += coeffs.c(n);
    if (n == N / 2) {
      at_half = s;
      ref = s;
    }
    if (n > N / 2) osc = std::max(osc, std::abs(s - ref));
  }
  rep.partial_sum_value = s;
  const Real osc_prev = std::abs(s - at_half);
  rep.partial_sums_converge = osc < 2e-3 * (std::abs(s) + 1.0) ||
                              (osc_prev < 1e-6 && osc < 1e-6);
  if (rep.partial_sums_converge && abel.converged)
    rep.partial_sums_converge = std::abs(s - claimed_beta) < 1e-2 * (std::abs(claimed_beta) + 1.0);
  return rep;
}

Complex laplace_transform(const SpectralDistribution& h, Complex z) {
  if (!(z.imag() > 0)) throw validation_error("laplace_transform: need Im z > 0");
  if (const auto* a = std::get_if<AtomicSpectrum>(&h)) {
    for (int n = 0; n < a->frequencies.size(); ++n)
      if (a->frequencies[n] < 0)
        throw validation_error("laplace_transform: spectrum must be supported on [0, inf)");
    Complex s = 0.0;
    for (int n = 0; n < a->frequencies.size(); ++n)
      s += a->amplitudes[n] * std::exp(Complex(0, 1) * z * Complex(a->frequencies[n]));
    return s;
  }
  if (const auto* m = std::get_if<HomogeneousModel>(&h)) {
    if (std::abs(m->coeff_minus) != 0.0)
      throw validation_error("laplace_transform: density must vanish on (-inf, 0)");
    if (m->log_power != 0.0)
      throw validation_error("laplace_transform: log-modulated densities unsupported");
    // int_0^inf c_+ u^a e^{izu} du = c_+ Gamma(a+1) (-iz)^{-a-1}
    const Complex a = Complex(m->degree);
    return m->coeff_plus * complex_gamma(a + 1.0) *
           std::exp(-(a + 1.0) * std::log(Complex(0, -1) * z));
  }
  const auto& s = std::get<SampledSignal>(h);
  if (s.origin < 0)
    throw validation_error("laplace_transform: sampled density must start at u >= 0");
  Complex acc = 0.0;
  const ArrayXcd& ch = s.channels.at(0);
  for (int n = 0; n < ch.size(); ++n) {
    const Real u = s.origin + n * s.spacing;
    const Real w = (n == 0 || n + 1 == ch.size()) ? 0.5 : 1.0;
    acc += w * ch[n] * std::exp(Complex(0, 1) * z * Complex(u));
  }
  return acc * s.spacing;
}

LaplaceProfile laplace_profile(const SpectralDistribution& h, Real omega, Real kappa,
                               int k, Real alpha, const ArrayXd& eps_grid) {
  if (!(omega > 0)) throw validation_error("laplace_profile: omega must be positive");
  if (!(kappa >= 0) || !(kappa < 1))
    throw validation_error("laplace_profile: kappa must lie in [0, 1)");

  // Boundary of Omega^kappa: the sides |x| = sigma^kappa for sigma in (0, 1]
  // plus the top edge sigma = 1, |x| <= 1.
  std::vector<std::pair<Real, Real>> pts;  // (x, sigma)
  const ArrayXd sig = log_spaced(1e-4, 1.0, 48);
  for (int i = 0; i < sig.size(); ++i) {
    const Real s = sig[i];
    const Real x = std::pow(s, kappa);
    pts.emplace_back(x, s);
    pts.emplace_back(-x, s);
  }
  for (int i = 0; i <= 16; ++i) pts.emplace_back(-1.0 + 2.0 * i / 16.0, 1.0);

  LaplaceProfile out;
  out.eps = eps_grid;
  out.kappa = kappa;
  out.k = k;
  out.S.resize(eps_grid.size());
  for (int i = 0; i < eps_grid.size(); ++i) {
    const Real eps = eps_grid[i];
    Real sup = 0.0;
    for (const auto& [x, s] : pts) {
      const Complex L = laplace_transform(h, eps * Complex(x, s * omega));
      sup = std::max(sup, std::pow(s, k) * std::pow(eps, 1.0 + alpha) * std::abs(L));
    }
    out.S[i] = sup;
  }
  return out;
}

}  // namespace asco
