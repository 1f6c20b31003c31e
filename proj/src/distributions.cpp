#include "asymptoscope/distributions.hpp"

#include <cmath>
#include <sstream>

namespace asco {

const std::string& distribution_label(const SpectralDistribution& f) {
  return std::visit([](const auto& v) -> const std::string& { return v.label; }, f);
}

AtomicSpectrum weierstrass(Real a, int j_max) {
  if (!(a > 0) || !(a < 1)) throw validation_error("weierstrass: need 0 < a < 1");
  // Drop dyadic levels whose amplitude cannot matter at double precision.
  int levels = 0;
  for (Real w = a; w > 1e-18 && levels < j_max; w *= a) ++levels;
  AtomicSpectrum s;
  s.frequencies.resize(2 * levels);
  s.amplitudes.resize(2 * levels);
  Real amp = 1.0;
  for (int j = 1; j <= levels; ++j) {
    amp *= a;
    const Real w = std::pow(2.0, j);
    // sin(w t) = (e^{iwt} - e^{-iwt}) / 2i; the 2 pi is the f_hat convention.
    s.frequencies[2 * (j - 1)] = w;
    s.amplitudes[2 * (j - 1)] = Complex(0, -kPi) * amp;
    s.frequencies[2 * (j - 1) + 1] = -w;
    s.amplitudes[2 * (j - 1) + 1] = Complex(0, kPi) * amp;
  }
  s.growth_q = 0.0;
  s.label = "weierstrass(" + std::to_string(a) + ")";
  return s;
}

AtomicSpectrum riemann_w(int n_max) {
  AtomicSpectrum s;
  s.frequencies.resize(2 * n_max);
  s.amplitudes.resize(2 * n_max);
  for (int n = 1; n <= n_max; ++n) {
    const Real w = kPi * static_cast<Real>(n) * n;
    const Real amp = 1.0 / (static_cast<Real>(n) * n);
    s.frequencies[2 * (n - 1)] = w;
    s.amplitudes[2 * (n - 1)] = Complex(0, -kPi) * amp;
    s.frequencies[2 * (n - 1) + 1] = -w;
    s.amplitudes[2 * (n - 1) + 1] = Complex(0, kPi) * amp;
  }
  s.growth_q = 0.0;
  s.truncated = true;
  s.label = "riemann_w";
  return s;
}

AtomicSpectrum r_beta(Complex beta, int n_max) {
  AtomicSpectrum s;
  s.frequencies.resize(n_max);
  s.amplitudes.resize(n_max);
  for (int n = 1; n <= n_max; ++n) {
    s.frequencies[n - 1] = kPi * static_cast<Real>(n) * n;
    s.amplitudes[n - 1] =
        2.0 * kPi * std::exp(-2.0 * beta * std::log(static_cast<Real>(n)));
  }
  s.growth_q = std::max(0.0, -beta.real());
  s.truncated = true;
  std::ostringstream os;
  os << "R_beta(beta=" << beta.real();
  if (beta.imag() != 0) os << "+" << beta.imag() << "i";
  os << ")";
  s.label = os.str();
  return s;
}

AtomicSpectrum theta_comb(int n_max) {
  AtomicSpectrum s;
  s.frequencies.resize(n_max + 1);
  s.amplitudes.resize(n_max + 1);
  s.frequencies[0] = 0.0;
  s.amplitudes[0] = 2.0 * kPi;
  for (int n = 1; n <= n_max; ++n) {
    s.frequencies[n] = kPi * static_cast<Real>(n) * n;
    s.amplitudes[n] = 4.0 * kPi;
  }
  s.growth_q = 0.0;
  s.truncated = true;
  s.label = "theta";
  return s;
}

AtomicSpectrum constant_signal(Complex c) {
  AtomicSpectrum s;
  s.frequencies.resize(1);
  s.amplitudes.resize(1);
  s.frequencies[0] = 0.0;
  s.amplitudes[0] = 2.0 * kPi * c;
  s.label = "constant";
  return s;
}

AtomicSpectrum atom(Real omega, Complex amplitude) {
  AtomicSpectrum s;
  s.frequencies.resize(1);
  s.amplitudes.resize(1);
  s.frequencies[0] = omega;
  s.amplitudes[0] = 2.0 * kPi * amplitude;
  s.label = "atom(" + std::to_string(omega) + ")";
  return s;
}

AtomicSpectrum cosine() {
  AtomicSpectrum s;
  s.frequencies.resize(2);
  s.amplitudes.resize(2);
  s.frequencies[0] = 1.0;
  s.amplitudes[0] = kPi;
  s.frequencies[1] = -1.0;
  s.amplitudes[1] = kPi;
  s.label = "cos";
  return s;
}

AtomicSpectrum delta_flat(Real band, Real d_omega) {
  const int half = static_cast<int>(band / d_omega);
  AtomicSpectrum s;
  s.frequencies.resize(2 * half + 1);
  s.amplitudes.resize(2 * half + 1);
  // emit by increasing |w| so the evaluation never needs to re-sort
  s.frequencies[0] = 0.0;
  s.amplitudes[0] = d_omega;
  for (int i = 1; i <= half; ++i) {
    s.frequencies[2 * i - 1] = i * d_omega;
    s.amplitudes[2 * i - 1] = d_omega;
    s.frequencies[2 * i] = -i * d_omega;
    s.amplitudes[2 * i] = d_omega;
  }
  s.growth_q = 0.0;
  s.label = "delta";
  return s;
}

HomogeneousModel heaviside() {
  HomogeneousModel m;
  m.degree = 0.0;
  m.coeff_plus = 1.0;
  m.coeff_minus = 0.0;
  m.label = "heaviside";
  return m;
}

HomogeneousModel abs_power(Real alpha) {
  HomogeneousModel m;
  m.degree = alpha;
  m.coeff_plus = 1.0;
  m.coeff_minus = 1.0;
  m.label = "homogeneous(" + std::to_string(alpha) + ")";
  return m;
}

HomogeneousModel abs_power_log(Real alpha, Real gamma) {
  HomogeneousModel m = abs_power(alpha);
  m.log_power = gamma;
  m.label = "homogeneous_log(" + std::to_string(alpha) + "," + std::to_string(gamma) + ")";
  return m;
}

HomogeneousModel boundary_power(Real alpha, bool upper) {
  // (t +- i0)^a = t_+^a + e^{+-i pi a} t_-^a
  HomogeneousModel m;
  m.degree = alpha;
  m.coeff_plus = 1.0;
  m.coeff_minus = std::exp(Complex(0, upper ? kPi * alpha : -kPi * alpha));
  m.label = upper ? "(t+i0)^a" : "(t-i0)^a";
  return m;
}

SpectralDistribution make_distribution(const std::string& name) {
  std::vector<std::string> parts;
  std::stringstream ss(name);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.empty()) throw validation_error("empty generator name");
  const std::string& base = parts[0];
  auto arg = [&](size_t i) -> Real {
    if (parts.size() <= i) throw validation_error("generator '" + base + "' missing parameter");
    // accept p/q fractions
    if (auto pos = parts[i].find('/'); pos != std::string::npos)
      return std::stod(parts[i].substr(0, pos)) / std::stod(parts[i].substr(pos + 1));
    return std::stod(parts[i]);
  };

  if (base == "weierstrass") return weierstrass(arg(1));
  if (base == "riemann_w") return riemann_w();
  if (base == "R_beta" || base == "r_beta") {
    // r_beta:<r>:<beta> is the translated family R_beta(r + t); the r shift is
    // applied by the caller through x0, so here only beta matters.
    return r_beta(Complex(arg(parts.size() > 2 ? 2 : 1), 0.0));
  }
  if (base == "heaviside") return heaviside();
  if (base == "homogeneous") return abs_power(arg(1));
  if (base == "theta") return theta_comb();
  if (base == "constant") return constant_signal(arg(1));
  if (base == "atom") return atom(arg(1));
  if (base == "cos") return cosine();
  if (base == "delta") return delta_flat();
  throw validation_error("unknown generator '" + name + "'");
}

}  // namespace asco
