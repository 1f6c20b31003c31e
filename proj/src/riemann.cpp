#include "asymptoscope/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "asymptoscope/quadrature.hpp"

namespace asco {

namespace {

long long floordiv(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// Phase table of e^{i pi r n^2} over one full period P = 2q.
struct PhaseTable {
  long long period;
  std::vector<Complex> phase;

  Complex at(long long n) const { return phase[static_cast<size_t>(n % period)]; }
};

PhaseTable phase_table(const RationalPoint& r) {
  const long long M = 2 * r.q;
  if (r.q > 1'000'000) throw validation_error("rational denominator too large");
  PhaseTable t;
  t.period = M;
  t.phase.resize(static_cast<size_t>(M));
  const long long pm = ((r.p % M) + M) % M;
  for (long long n = 0; n < M; ++n) {
    const long long residue = (pm * ((n * n) % M)) % M;
    t.phase[static_cast<size_t>(n)] =
        std::exp(Complex(0, kPi * static_cast<Real>(residue) / static_cast<Real>(r.q)));
  }
  return t;
}

Real digamma(Real x) {
  Real acc = 0.0;
  while (x < 8.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const Real inv = 1.0 / x, inv2 = inv * inv;
  return acc + std::log(x) - 0.5 * inv -
         inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 / 240)));
}

const Real kBernoulli[12] = {1.0 / 6,        -1.0 / 30,       1.0 / 42,
                             -1.0 / 30,      5.0 / 66,        -691.0 / 2730,
                             7.0 / 6,        -3617.0 / 510,   43867.0 / 798,
                             -174611.0 / 330, 854513.0 / 138, -236364091.0 / 2730};

// Euler-Maclaurin continuation of the Hurwitz zeta, z != 1.
Complex hurwitz_zeta(Complex z, Real a) {
  const int N = 24, J = 11;
  Complex s = 0.0;
  for (int n = 0; n < N; ++n) s += std::exp(-z * std::log(n + a));
  const Real Na = N + a;
  const Complex lN = std::log(Complex(Na));
  s += std::exp((Complex(1.0) - z) * lN) / (z - Complex(1.0));
  s += 0.5 * std::exp(-z * lN);
  Complex poch = z;
  Real fact = 2.0;
  for (int j = 1; j <= J; ++j) {
    s += kBernoulli[j - 1] / fact * poch * std::exp((-z - Real(2 * j - 1)) * lN);
    poch *= (z + Real(2 * j - 1)) * (z + Real(2 * j));
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  return s;
}

// Analytic continuation of zeta_r through the residue-class split
//   zeta_r(z) = P^{-z} sum_a phi_a zeta_H(z, a/P).
// At z = 1 returns the finite part A_r(1) (pole cancelled or subtracted).
Complex zeta_continued(const PhaseTable& t, Complex z) {
  const Real P = static_cast<Real>(t.period);
  if (std::abs(z - Complex(1.0)) < 1e-12) {
    Complex s = 0.0;
    for (long long n = 1; n <= t.period; ++n)
      s += t.at(n) * (-digamma(static_cast<Real>(n) / P) - std::log(P));
    return s / P;
  }
  Complex s = 0.0;
  for (long long n = 1; n <= t.period; ++n)
    s += t.at(n) * hurwitz_zeta(z, static_cast<Real>(n) / P);
  return s * std::exp(-z * std::log(P));
}

int riesz_order(Complex z) {
  const int k = static_cast<int>(std::ceil(1.0 - z.real())) + 1;
  return std::min(4, std::max(1, k));
}

// Riesz mean at cut X of the mean-zero part of the phases:
//   sum_{n<X} (phi(n) - p_r) n^{-z} (1 - n/X)^kappa
// The drift itself is restored analytically through the Riemann zeta, so no
// X^3-sized cancellation ever enters in floating point.
Complex riesz_mean_zero(const std::vector<Complex>& d, long long period, Complex z,
                        int kappa, long long X) {
  const Real Xr = static_cast<Real>(X);
  auto g = [&](long long n) -> Complex {
    const Real u = 1.0 - static_cast<Real>(n) / Xr;
    return std::exp(-z * std::log(static_cast<Real>(n))) * std::pow(u, kappa);
  };
  // Blockwise over periods against a local reference: the weights d sum to 0
  // over each full period, so only first differences of g enter and the
  // floating-point terms stay O(g'(n) * period) instead of O(g(n)).
  Complex s = 0.0, comp = 0.0;  // Kahan over blocks
  for (long long base = 0; base < X; base += period) {
    const long long n0 = std::max<long long>(base, 1);
    const Complex gref = g(n0);
    Complex bs = 0.0, dsum = 0.0;
    const long long stop = std::min(base + period, X);
    for (long long n = n0; n < stop; ++n) {
      const Complex w = d[static_cast<size_t>(n % period)];
      bs += w * (g(n) - gref);
      dsum += w;
    }
    bs += gref * dsum;  // exactly zero on re-centred interior blocks
    const Complex y = bs - comp;
    const Complex t2 = s + y;
    comp = (t2 - s) - y;
    s = t2;
  }
  return s;
}

struct RieszResult {
  Complex value;  // the Cesaro-limit contribution of the mean-zero part
  Real error;
  int order;
};

RieszResult riesz_A(const PhaseTable& t, Complex z, Complex p_r) {
  const int kappa = riesz_order(z);
  const long long P = t.period;
  // Mean-zero table, re-centred so its period sum is exactly 0 in floating
  // point (a residual would act like a spurious drift at large X).
  std::vector<Complex> d(t.phase.size());
  for (size_t j = 0; j < d.size(); ++j) d[j] = t.phase[j] - p_r;
  for (int pass = 0; pass < 2; ++pass) {
    Complex res = 0.0;
    for (const Complex& v : d) res += v;
    res /= static_cast<Real>(d.size());
    for (Complex& v : d) v -= res;
  }
  // Balance the clean c/X truncation against eps * X^{-Re z} rounding noise
  // in g: push the cut high only when the terms stay O(1).
  const long long want = z.real() < -0.5 ? 6000 : 24000;
  const long long X0 = P * std::max<long long>(1, (want + P - 1) / P);
  Complex v[4];
  for (int j = 0; j < 4; ++j) v[j] = riesz_mean_zero(d, P, z, kappa, X0 << j);
  // Richardson ladder against 1/X, 1/X^2, 1/X^3.
  Complex prev = v[3];
  int count = 4;
  for (int lev = 1; lev < 4; ++lev) {
    const Real f = std::pow(2.0, lev);
    prev = v[count - 1];
    for (int j = 0; j + 1 < count; ++j) v[j] = (f * v[j + 1] - v[j]) / (f - 1.0);
    --count;
  }
  return {v[0], std::abs(v[0] - prev) + 1e-12, kappa};
}

}  // namespace

Complex complex_gamma(Complex z) {
  static const Real g[9] = {0.99999999999980993,  676.5203681218851,
                            -1259.1392167224028,  771.32342877765313,
                            -176.61502916214059,  12.507343278686905,
                            -0.13857109526572012, 9.9843695780195716e-6,
                            1.5056327351493116e-7};
  if (z.real() < 0.5)
    return kPi / (std::sin(kPi * z) * complex_gamma(Complex(1.0) - z));
  z -= 1.0;
  Complex x = g[0];
  for (int i = 1; i < 9; ++i) x += g[i] / (z + Real(i));
  const Complex t = z + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

std::pair<long long, long long> apply_theta_word(const ThetaWord& word,
                                                 long long p0, long long q0) {
  long long p = p0, q = q0;
  for (ThetaLetter l : word.letters) {
    switch (l) {
      case ThetaLetter::K2: p += 2 * q; break;
      case ThetaLetter::K2inv: p -= 2 * q; break;
      case ThetaLetter::U: {
        if (p == 0) throw validation_error("theta word applies U at 0");
        long long np = -q, nq = p;
        if (nq < 0) {
          np = -np;
          nq = -nq;
        }
        p = np;
        q = nq;
        break;
      }
    }
  }
  return {p, q};
}

RationalPoint classify_rational(long long p, long long q) {
  if (q < 1) throw validation_error("classify_rational: q must be >= 1");
  const long long g = std::gcd(std::abs(p), q);
  if (g > 0) {
    p /= g;
    q /= g;
  }
  if (p == 0) q = 1;

  RationalPoint out;
  out.p = p;
  out.q = q;
  out.parity = (p % 2 != 0 && q % 2 != 0) ? ParityClass::S1 : ParityClass::S0;

  std::vector<ThetaLetter> reduction;
  long long a = p, b = q;
  for (int guard = 0; guard < 4096; ++guard) {
    if (b == 1 && (a == 0 || a == 1)) break;
    const long long k = floordiv(a + b - 1, 2 * b);  // a - 2kb lands in (-b, b]
    for (long long i = 0; i < std::abs(k); ++i)
      reduction.push_back(k > 0 ? ThetaLetter::K2inv : ThetaLetter::K2);
    a -= 2 * k * b;
    if (b == 1 && (a == 0 || a == 1)) break;
    reduction.push_back(ThetaLetter::U);  // denominator strictly decreases here
    long long na = a < 0 ? b : -b;
    const long long nb = std::abs(a);
    a = na;
    b = nb;
  }
  if (!(b == 1 && (a == 0 || a == 1)))
    throw numerical_error("classify_rational: reduction did not terminate");

  for (auto it = reduction.rbegin(); it != reduction.rend(); ++it) {
    switch (*it) {
      case ThetaLetter::K2: out.word.letters.push_back(ThetaLetter::K2inv); break;
      case ThetaLetter::K2inv: out.word.letters.push_back(ThetaLetter::K2); break;
      case ThetaLetter::U: out.word.letters.push_back(ThetaLetter::U); break;
    }
  }
  const long long base = (out.parity == ParityClass::S0) ? 0 : 1;
  if (a != base)
    throw numerical_error("classify_rational: parity class and orbit endpoint disagree");
  const auto check = apply_theta_word(out.word, base, 1);
  if (check.first != p || check.second != q)
    throw numerical_error("classify_rational: theta word fails to reproduce the point");
  return out;
}

Complex gauss_mean(const RationalPoint& r) {
  const PhaseTable t = phase_table(r);
  Complex s = 0.0;
  for (long long n = 1; n <= t.period; ++n) s += t.at(n);
  return s / static_cast<Real>(t.period);
}

PConstant p_constant(const RationalPoint& r) {
  if (r.parity == ParityClass::S1) return {0.0, false};
  Complex pr = 1.0;
  long long a = 0, b = 1;
  for (ThetaLetter l : r.word.letters) {
    switch (l) {
      case ThetaLetter::K2: a += 2 * b; break;
      case ThetaLetter::K2inv: a -= 2 * b; break;
      case ThetaLetter::U: {
        const Real rv = static_cast<Real>(a) / static_cast<Real>(b);
        pr *= std::sqrt(Complex(0, -1) / Complex(rv));
        long long na = a < 0 ? b : -b;
        const long long nb = std::abs(a);
        a = na;
        b = nb;
        break;
      }
    }
  }
  const Complex mean = gauss_mean(r);
  if (std::abs(pr - mean) > 1e-10) {
    std::ostringstream os;
    os << "p_constant: branch conflict at " << r.str() << ": fold (" << pr.real() << ","
       << pr.imag() << ") vs gauss mean (" << mean.real() << "," << mean.imag() << ")";
    throw numerical_error(os.str());
  }
  return {pr, true};
}

GammaConstant gamma_constant(const RationalPoint& r) {
  const PhaseTable t = phase_table(r);
  const Complex pr = r.parity == ParityClass::S0 ? p_constant(r).value : Complex(0.0);
  const long long P = t.period;
  const long long base = P * std::max<long long>(1, (20000 + P - 1) / P);

  const int levels = 5;
  std::vector<Complex> v(levels);
  Complex running = 0.0;
  long long upto = 0;
  for (int j = 0; j < levels; ++j) {
    const long long N = base << j;
    for (long long n = upto + 1; n <= N; ++n) running += t.at(n) / static_cast<Real>(n);
    upto = N;
    v[j] = running - pr * std::log(static_cast<Real>(N));
  }
  std::vector<Complex> row = v;
  Complex prev = row.back();
  while (row.size() > 1) {
    const int lev = levels - static_cast<int>(row.size()) + 1;
    const Real f = std::pow(2.0, lev);
    prev = row.back();
    for (size_t i = 0; i + 1 < row.size(); ++i)
      row[i] = (f * row[i + 1] - row[i]) / (f - 1.0);
    row.pop_back();
  }
  const Complex value = row.front();
  const Real err = std::abs(value - prev);
  if (!std::isfinite(value.real()) || err > 1e-4)
    throw numerical_error("gamma_constant: extrapolation did not converge");
  return {value, err};
}

ZetaEvaluation zeta_r(const RationalPoint& r, Complex z, ZetaMethod method) {
  const PhaseTable t = phase_table(r);
  ZetaEvaluation out;
  out.r = r;
  out.z = z;
  out.method = method;
  switch (method) {
    case ZetaMethod::direct: {
      if (!(z.real() > 1.0))
        throw validation_error("zeta_r: direct method requires Re z > 1");
      out.value = zeta_continued(t, z);
      out.error_estimate = 1e-12;
      break;
    }
    case ZetaMethod::cesaro: {
      if (!(z.real() > -3.0))
        throw validation_error("zeta_r: cesaro method covers Re z > -3 (order <= 4)");
      if (std::abs(z - Complex(1.0)) < 1e-12)
        throw validation_error("zeta_r: pole at z = 1; use pole_subtracted");
      const Complex pr = r.parity == ParityClass::S0 ? p_constant(r).value : Complex(0.0);
      const RieszResult res = riesz_A(t, z, pr);
      out.cesaro_order = res.order;
      out.error_estimate = res.error;
      out.value = res.value + pr * hurwitz_zeta(z, 1.0);
      break;
    }
    case ZetaMethod::pole_subtracted: {
      if (!(z.real() > -3.0))
        throw validation_error("zeta_r: pole_subtracted covers Re z > -3 (order <= 4)");
      const Complex pr = r.parity == ParityClass::S0 ? p_constant(r).value : Complex(0.0);
      const RieszResult res = riesz_A(t, z, pr);
      out.cesaro_order = res.order;
      out.error_estimate = res.error;
      const Real euler_gamma = 0.5772156649015329;
      if (std::abs(z - Complex(1.0)) < 1e-12)
        out.value = res.value + pr * euler_gamma;  // A_r(1) = gamma_r
      else
        out.value = res.value + pr * (hurwitz_zeta(z, 1.0) - 1.0 / (z - 1.0));
      break;
    }
  }
  return out;
}

ExpansionCoefficients weak_expansion(const RationalPoint& r, Complex beta, int M) {
  if (M < 0 || M > 12) throw validation_error("weak_expansion: M must be in 0..12");
  const PhaseTable t = phase_table(r);
  ExpansionCoefficients out;
  out.r = r;
  out.beta = beta;
  out.p_r = r.parity == ParityClass::S0 ? p_constant(r).value : Complex(0.0);

  const bool is_s0 = r.parity == ParityClass::S0;
  const Complex half_gap = Complex(0.5) - beta;
  const bool at_log_point = std::abs(beta - Complex(0.5)) < 1e-12;
  const Real euler_gamma = 0.5772156649015329;

  if (is_s0 && at_log_point) {
    const GammaConstant g = gamma_constant(r);
    out.gamma_r = g.value;
    out.has_log_term = true;
    out.log_coefficient = out.p_r / 2.0;
    out.constant_term = g.value - out.p_r / 2.0 * euler_gamma;
    out.constant_term_b = g.value + out.p_r / 2.0 * std::log(kPi);
  } else if (is_s0) {
    const bool gamma_pole = std::abs(half_gap.imag()) < 1e-12 &&
                            half_gap.real() < 0.5 &&
                            std::abs(half_gap.real() - std::round(half_gap.real())) < 1e-12;
    if (gamma_pole)
      throw validation_error(
          "weak_expansion: Gamma(1/2 - beta) pole; use the Taylor-only branch");
    const Complex log_mipi = Complex(std::log(kPi), -kPi / 2.0);  // log(-i pi)
    out.singular_coefficient = std::exp((beta - Complex(0.5)) * log_mipi) *
                               complex_gamma(half_gap) * out.p_r / 2.0;
    out.gamma_r = gamma_constant(r).value;
  }

  out.taylor.resize(M);
  Complex ipi_pow = 1.0;
  Real mfact = 1.0;
  for (int m = 0; m < M; ++m) {
    if (m > 0) {
      ipi_pow *= Complex(0, kPi);
      mfact *= m;
    }
    const Complex zz = 2.0 * beta - 2.0 * Real(m);
    if (is_s0 && std::abs(zz - Complex(1.0)) < 1e-12) {
      if (at_log_point && m == 0) {
        out.taylor[m] = 0.0;  // absorbed into the log/constant structure
        continue;
      }
      throw validation_error("weak_expansion: Taylor coefficient hits the pole at z = 1");
    }
    out.taylor[m] = zeta_continued(t, zz) * ipi_pow / mfact;
  }
  return out;
}

Real decay_slope(const ArrayXd& eps, const ArrayXd& value, const ArrayXd& floors) {
  std::vector<Real> xs, ys;
  for (int i = 0; i < eps.size(); ++i) {
    if (value[i] > floors[i] && value[i] > 0) {
      xs.push_back(std::log(eps[i]));
      ys.push_back(std::log(value[i]));
    }
  }
  if (xs.size() >= 3) {
    Real sx = 0, sy = 0, sxx = 0, sxy = 0;
    const Real n = static_cast<Real>(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  int hi = static_cast<int>(eps.size()) - 1;
  const Real v_hi = std::max(value[hi], floors[hi]);
  const Real v_lo = std::max(value[0], floors[0]);
  return (std::log(v_hi) - std::log(v_lo)) / (std::log(eps[hi]) - std::log(eps[0]));
}

ExpansionVerification verify_expansion(const RationalPoint& r, Complex beta,
                                       const KernelSpec& test, const ArrayXd& eps_grid,
                                       int M) {
  const PhaseTable t = phase_table(r);
  const ExpansionCoefficients coeffs = weak_expansion(r, beta, M);

  std::vector<Complex> mu(std::max(M, 1), 0.0);
  for (int m = 0; m < M; ++m) mu[m] = moment(test, m);

  Complex I_sing = 0.0, J_log = 0.0, J_sgn = 0.0;
  const Real cut = test.time_cutoff();
  if (std::abs(coeffs.singular_coefficient) > 0) {
    const Real a = (beta - Complex(0.5)).real();
    if (a <= -1.0)
      throw numerical_error("verify_expansion: singular pairing not integrable");
    const int p = std::max(1, static_cast<int>(std::ceil(2.0 / (1.0 + a))));
    auto leg = [&](int side) -> Complex {
      auto g = [&](Real s) -> Complex {
        const Real tau = std::pow(s, p);
        return std::pow(tau, a) * test.time(side * tau) * (p * std::pow(s, p - 1));
      };
      return quad::integrate(g, 0.0, std::pow(cut, 1.0 / p), 1e-12).value;
    };
    I_sing = leg(+1) + std::exp(Complex(0, kPi * a)) * leg(-1);
  }
  if (coeffs.has_log_term) {
    auto gl = [&](Real s) -> Complex {
      const Real tau = s * s;
      return std::log(tau) * (test.time(tau) + test.time(-tau)) * 2.0 * s;
    };
    J_log = quad::integrate(gl, 0.0, std::sqrt(cut), 1e-12).value;
    auto gs = [&](Real tau) -> Complex { return test.time(tau) - test.time(-tau); };
    J_sgn = quad::integrate(gs, 0.0, cut, 1e-12).value;
  }

  ExpansionVerification out;
  out.eps = eps_grid;
  out.residual.resize(eps_grid.size());
  ArrayXd floors(eps_grid.size());
  const Real euler_gamma = 0.5772156649015329;

  for (int i = 0; i < eps_grid.size(); ++i) {
    const Real eps = eps_grid[i];
    Complex pair = 0.0;
    Real scale = 0.0;
    int quiet = 0;
    for (long long n = 1;; ++n) {
      if (n >= 20'000'000)
        throw numerical_error("verify_expansion: pairing truncation failed");
      const Complex term = std::exp(-2.0 * beta * std::log(static_cast<Real>(n))) *
                           t.at(n) * test.fourier(-eps * kPi * n * n);
      pair += term;
      scale += std::abs(term);
      if (std::abs(term) < 1e-17 * (scale + 1.0)) {
        if (++quiet >= 6) break;
      } else {
        quiet = 0;
      }
    }

    Complex expansion = 0.0;
    if (std::abs(coeffs.singular_coefficient) > 0)
      expansion += coeffs.singular_coefficient *
                   std::exp((beta - Complex(0.5)) * std::log(eps)) * I_sing;
    if (coeffs.has_log_term) {
      expansion += coeffs.gamma_r * mu[0];
      expansion += coeffs.p_r / 2.0 *
                   (-std::log(eps / kPi) * mu[0] - J_log +
                    Complex(0, kPi / 2.0) * J_sgn - euler_gamma * mu[0]);
    }
    Real ep = 1.0;
    for (int m = 0; m < M; ++m) {
      expansion += coeffs.taylor[m] * ep * mu[m];
      ep *= eps;
    }
    out.residual[i] = std::abs(pair - expansion);
    floors[i] = 1e-14 * (std::abs(pair) + std::abs(expansion) + 1.0);
  }

  out.decay_order = decay_slope(eps_grid, out.residual, floors);

  Real prediction = 6.0;
  for (int m = M; m < M + 4 && m <= 12; ++m) {
    const Complex zz = 2.0 * beta - 2.0 * Real(m);
    if (r.parity == ParityClass::S0 && std::abs(zz - Complex(1.0)) < 1e-12) continue;
    Real mf = 1.0;
    for (int j = 2; j <= m; ++j) mf *= j;
    const Complex c = zeta_continued(t, zz) * std::pow(Complex(0, kPi), m) / mf;
    if (std::abs(c * moment(test, m)) > 1e-10) {
      prediction = m;
      break;
    }
  }
  out.threshold = std::min(prediction, 6.0);
  out.pass = out.decay_order >= out.threshold;
  return out;
}

}  // namespace asco
