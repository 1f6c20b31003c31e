#include "asymptoscope/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "asymptoscope/quadrature.hpp"

namespace asco {

namespace {

constexpr Real kZeroTol = 1e-12;  // "identically zero on a ray" threshold

// Smooth descent from 1 to 0 on [0, 1] built from e^{-1/v} gluing.
Real bump_step(Real xi) {
  if (xi <= 0) return 1.0;
  if (xi >= 1) return 0.0;
  const Real a = std::exp(-1.0 / (1.0 - xi));  // ->1 side
  const Real b = std::exp(-1.0 / xi);          // ->0 side
  return a / (a + b);
}

Real bump_step_derivative(Real xi) {
  if (xi <= 0 || xi >= 1) return 0.0;
  const Real a = std::exp(-1.0 / (1.0 - xi));
  const Real b = std::exp(-1.0 / xi);
  const Real da = -a / ((1.0 - xi) * (1.0 - xi));
  const Real db = b / (xi * xi);
  return (da * (a + b) - a * (da + db)) / ((a + b) * (a + b));
}

Real hermite_phys(int n, Real x) {
  Real h0 = 1.0, h1 = 2.0 * x;
  if (n == 0) return h0;
  for (int k = 1; k < n; ++k) {
    const Real h2 = 2.0 * x * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

// Fornberg finite-difference weights for the m-th derivative at x = 0 on the
// given nodes.
std::vector<Real> fornberg_weights(const std::vector<Real>& x, int m) {
  const int n = static_cast<int>(x.size());
  std::vector<std::vector<Real>> c(n, std::vector<Real>(m + 1, 0.0));
  Real c1 = 1.0;
  Real c4 = x[0];
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    Real c2 = 1.0;
    const Real c5 = c4;
    c4 = x[i];
    for (int j = 0; j < i; ++j) {
      const Real c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k)
        c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<Real> w(n);
  for (int i = 0; i < n; ++i) w[i] = c[i][m];
  return w;
}

Complex fd_derivative(const std::function<Complex(Real)>& f, int m, Real h) {
  const int half = (m + 9) / 2;
  std::vector<Real> nodes;
  for (int i = -half; i <= half; ++i) nodes.push_back(i * h);
  const auto w = fornberg_weights(nodes, m);
  Complex d = 0.0;
  for (size_t i = 0; i < nodes.size(); ++i) d += w[i] * f(nodes[i]);
  return d;
}

}  // namespace

// ---------------------------------------------------------------------------
// Time-side cache

struct KernelSpec::TimeCache {
  Real T = 0.0;      // half-window
  Real dt = 0.0;
  ArrayXd values;    // phi(t_k) on t_k = -T + k dt  (real part; our kernels
                     // with a cached time side are real-valued)
  Real cutoff = 0.0;
};

const KernelSpec::TimeCache& KernelSpec::cache() const {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (time_cache_) return *time_cache_;

  auto c = std::make_shared<TimeCache>();
  const int N = 1 << 16;
  c->T = 256.0;
  c->dt = 2.0 * c->T / N;
  const Real du = kPi / c->T;

  std::vector<Complex> a(N);
  for (int jj = 0; jj < N; ++jj) {
    const int j = jj < N / 2 ? jj : jj - N;
    const Real sign = (j % 2 == 0) ? 1.0 : -1.0;
    a[jj] = fourier_eval_(j * du) * sign;
  }
  Eigen::FFT<Real> fft;
  std::vector<Complex> out(N);
  fft.inv(out, a);  // includes the 1/N factor
  c->values.resize(N);
  const Real scale = du * N / (2.0 * kPi);
  for (int k = 0; k < N; ++k) c->values[k] = out[k].real() * scale;

  // Locate the decay radius.
  Real cut = c->T;
  for (int k = 0; k < N / 2; ++k) {
    const Real t = -c->T + k * c->dt;
    if (std::abs(c->values[k]) > 1e-13 || std::abs(c->values[N - 1 - k]) > 1e-13) {
      cut = std::abs(t) + 1.0;
      break;
    }
  }
  c->cutoff = cut;
  time_cache_ = std::move(c);
  return *time_cache_;
}

KernelSpec::KernelSpec(std::function<Complex(Real)> fourier_eval,
                       int declared_vanishing_order, KernelSymmetry symmetry,
                       std::string label,
                       std::optional<std::pair<Real, Real>> support_hint)
    : fourier_eval_(std::move(fourier_eval)),
      vanishing_order_(declared_vanishing_order),
      symmetry_(symmetry),
      label_(std::move(label)),
      support_hint_(std::move(support_hint)) {}

Real KernelSpec::time(Real t) const {
  if (analytic_time_) return analytic_time_(t);
  const TimeCache& c = cache();
  const Real pos = (t + c.T) / c.dt;
  const int k = static_cast<int>(std::floor(pos));
  if (k < 1 || k + 2 >= c.values.size()) return 0.0;
  // Catmull-Rom through the four surrounding samples.
  const Real s = pos - k;
  const Real p0 = c.values[k - 1], p1 = c.values[k], p2 = c.values[k + 1],
             p3 = c.values[k + 2];
  return p1 + 0.5 * s * (p2 - p0 + s * (2 * p0 - 5 * p1 + 4 * p2 - p3 +
                                        s * (3 * (p1 - p2) + p3 - p0)));
}

Real KernelSpec::time_cutoff() const {
  if (analytic_time_) {
    Real t = 8.0;
    while (t < 1e7 && std::abs(analytic_time_(t)) + std::abs(analytic_time_(-t)) > 1e-13)
      t *= 2.0;
    return t;
  }
  return cache().cutoff;
}

// ---------------------------------------------------------------------------
// Atlas

KernelSpec make_kernel(const std::string& name) {
  std::string base = name;
  Real param = 0.0;
  bool has_param = false;
  if (auto pos = name.find(':'); pos != std::string::npos) {
    base = name.substr(0, pos);
    param = std::stod(name.substr(pos + 1));
    has_param = true;
  }

  if (base == "gaussian") {
    KernelSpec k([](Real u) -> Complex { return std::exp(-u * u); }, 0,
                 KernelSymmetry::even, "gaussian");
    k.set_analytic_time([](Real t) {
      return std::exp(-t * t / 4.0) / (2.0 * std::sqrt(kPi));
    });
    return k;
  }
  if (base == "heat") {
    // One-sided exponential symbol: phi_hat(-u) = e^{-u} on u >= 0, extended
    // evenly; inverse transform is the Poisson kernel.
    KernelSpec k([](Real u) -> Complex { return std::exp(-std::abs(u)); }, 0,
                 KernelSymmetry::even, "heat");
    k.set_analytic_time([](Real t) { return 1.0 / (kPi * (1.0 + t * t)); });
    return k;
  }
  if (base == "lizorkin_exp") {
    return KernelSpec(
        [](Real u) -> Complex {
          const Real au = std::abs(u);
          return au == 0.0 ? 0.0 : std::exp(-au - 1.0 / au);
        },
        kAllMoments, KernelSymmetry::even, "lizorkin_exp");
  }
  if (base == "shifted_lizorkin") {
    if (!has_param || !(param >= 0))
      throw validation_error("shifted_lizorkin needs a nonnegative shift, e.g. shifted_lizorkin:1.0");
    const Real tau = param;
    return KernelSpec(
        [tau](Real u) -> Complex {
          const Real au = std::abs(u);
          return au <= tau ? 0.0 : std::exp(-au - 1.0 / (au - tau));
        },
        kAllMoments, KernelSymmetry::even,
        "shifted_lizorkin:" + std::to_string(tau),
        std::make_pair(tau, std::numeric_limits<Real>::infinity()));
  }
  if (base == "lp_phi") return lp_pair_phi();
  if (base == "lp_psi") return lp_pair_psi();
  if (base == "gauss_power") {
    const int N = static_cast<int>(param);
    if (!has_param || N < 2 || N % 2 != 0)
      throw validation_error("gauss_power needs an even order >= 2, e.g. gauss_power:2");
    KernelSpec k(
        [N](Real u) -> Complex { return std::pow(u, N) * std::exp(-u * u); }, N,
        KernelSymmetry::even, "gauss_power:" + std::to_string(N));
    const Real parity = (N / 2) % 2 == 0 ? 1.0 : -1.0;
    k.set_analytic_time([N, parity](Real t) {
      return parity * std::pow(2.0, -N) * hermite_phys(N, t / 2.0) *
             std::exp(-t * t / 4.0) / (2.0 * std::sqrt(kPi));
    });
    return k;
  }
  throw validation_error("unknown kernel '" + name + "'");
}

KernelSpec lp_pair_phi() {
  return KernelSpec(
      [](Real u) -> Complex {
        const Real au = std::abs(u);
        if (au <= 0.5) return 1.0;
        if (au >= 1.0) return 0.0;
        return bump_step(2.0 * (au - 0.5));
      },
      0, KernelSymmetry::even, "lp_phi");
}

KernelSpec lp_pair_psi() {
  // psi_hat(u) = -u d/du phi_hat(u); supported on 1/2 <= |u| <= 1.
  return KernelSpec(
      [](Real u) -> Complex {
        const Real au = std::abs(u);
        if (au <= 0.5 || au >= 1.0) return 0.0;
        return -au * 2.0 * bump_step_derivative(2.0 * (au - 0.5));
      },
      kAllMoments, KernelSymmetry::even, "lp_psi", std::make_pair(0.5, 1.0));
}

// ---------------------------------------------------------------------------
// Moments and degeneracy diagnostics

Complex moment(const KernelSpec& kernel, int m) {
  if (m < 0 || m > 12) throw validation_error("moment: unsupported order (m <= 12)");
  if (kernel.is_lizorkin()) return 0.0;
  if (kernel.symmetry() == KernelSymmetry::even && m % 2 == 1) return 0.0;
  if (m == 0) {
    const Complex im = std::pow(Complex(0, 1), 0);
    return im * kernel.fourier(0.0);
  }
  auto f = [&](Real u) { return kernel.fourier(u); };
  const Real h = 0.28 / std::sqrt(1.0 + m);
  const Complex d1 = fd_derivative(f, m, h);
  const Complex d2 = fd_derivative(f, m, h / 2.0);
  const int p = 9;  // stencil accuracy order
  const Complex rich = (std::pow(2.0, p) * d2 - d1) / (std::pow(2.0, p) - 1.0);
  return std::pow(Complex(0, 1), m) * rich;
}

NondegeneracyReport is_nondegenerate(const KernelSpec& kernel,
                                     const ArrayXd& radial_grid) {
  if (radial_grid.size() < 8)
    throw validation_error("is_nondegenerate: radial grid too small");
  NondegeneracyReport rep;
  for (int i = 0; i < radial_grid.size(); ++i) {
    rep.witness_plus = std::max(rep.witness_plus, std::abs(kernel.fourier(radial_grid[i])));
    rep.witness_minus = std::max(rep.witness_minus, std::abs(kernel.fourier(-radial_grid[i])));
  }
  rep.verdict = rep.witness_plus > kZeroTol && rep.witness_minus > kZeroTol;
  return rep;
}

NondegeneracyReport is_nondegenerate(const KernelSpec& kernel) {
  return is_nondegenerate(kernel, log_spaced(1e-3, 1e3, 256));
}

NondegeneracyIndex nondegeneracy_index(const KernelSpec& kernel) {
  if (!is_nondegenerate(kernel).verdict)
    throw degeneracy_error("nondegeneracy_index: kernel '" + kernel.label() +
                           "' is degenerate");
  NondegeneracyIndex out;
  for (int dir : {+1, -1}) {
    auto nonzero = [&](Real r) { return kernel.fourier(dir * r) != Complex(0.0); };
    if (nonzero(0.0)) continue;  // support reaches the origin on this ray
    // Coarse scan for the first exactly-nonzero radius.
    const ArrayXd grid = log_spaced(1e-9, 1e3, 1200);
    Real lo = 0.0, hi = -1.0;
    for (int i = 0; i < grid.size(); ++i) {
      if (nonzero(grid[i])) {
        hi = grid[i];
        lo = i > 0 ? grid[i - 1] : 0.0;
        break;
      }
    }
    if (hi < 0)
      throw degeneracy_error("nondegeneracy_index: no support found on a ray");
    for (int it = 0; it < 80 && hi - lo > 1e-12 * (1.0 + hi); ++it) {
      const Real mid = 0.5 * (lo + hi);
      (nonzero(mid) ? hi : lo) = mid;
    }
    if (hi > out.tau) {
      out.tau = hi;
      out.resolution = hi - lo;
    }
  }
  return out;
}

std::optional<StrongNondegeneracy> strong_nondegeneracy(const KernelSpec& kernel) {
  const Real r = 0.5;
  auto min_ratio = [&](int N, Real u_min) {
    const ArrayXd grid = log_spaced(u_min, r, 400);
    Real c = std::numeric_limits<Real>::infinity();
    for (int i = 0; i < grid.size(); ++i)
      for (int s : {+1, -1})
        c = std::min(c, std::abs(kernel.fourier(s * grid[i])) /
                            std::pow(grid[i], N));
    return c;
  };
  for (int N = 0; N <= 12; ++N) {
    const Real c1 = min_ratio(N, 1e-5);
    const Real c2 = min_ratio(N, 1e-8);
    if (c2 > 1e-60 && c2 >= 0.5 * c1) {
      StrongNondegeneracy s;
      s.N = N;
      s.r = r;
      s.C = std::min(c1, c2);
      return s;
    }
  }
  return std::nullopt;
}

Complex calibration_constant(const KernelSpec& psi, const KernelSpec& eta,
                             int direction, Real abs_tol) {
  if (!psi.is_wavelet() || !eta.is_wavelet())
    throw validation_error("calibration_constant: both kernels must be wavelets");
  if (direction != 1 && direction != -1)
    throw validation_error("calibration_constant: direction must be +1 or -1");
  auto f = [&](Real radius) -> Complex {
    return std::conj(psi.fourier(direction * radius)) * eta.fourier(direction * radius);
  };
  return quad::integrate_log_axis(f, abs_tol).value;
}

KernelSpec make_reconstruction_wavelet(const KernelSpec& psi) {
  if (!psi.is_wavelet())
    throw validation_error("make_reconstruction_wavelet: input is not a wavelet");
  if (!is_nondegenerate(psi).verdict)
    throw degeneracy_error("make_reconstruction_wavelet: wavelet is degenerate");
  const Complex c_plus = calibration_constant(psi, psi, +1);
  const Complex c_minus = calibration_constant(psi, psi, -1);
  if (std::abs(c_plus) < 1e-30 || std::abs(c_minus) < 1e-30)
    throw degeneracy_error("make_reconstruction_wavelet: vanishing calibration constant");
  // psi is captured by value so eta outlives the argument.
  KernelSpec eta(
      [psi, c_plus, c_minus](Real u) -> Complex {
        return psi.fourier(u) / (u >= 0 ? c_plus : c_minus);
      },
      psi.declared_vanishing_order(),
      std::abs(c_plus - c_minus) < 1e-13 ? psi.symmetry() : KernelSymmetry::none,
      "recon(" + psi.label() + ")", psi.support_hint());
  return eta;
}

}  // namespace asco
