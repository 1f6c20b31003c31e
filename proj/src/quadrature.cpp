#include "asymptoscope/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace asco::quad {

namespace {

// G7/K15 nodes and weights on [-1, 1].
const double kKronrodNodes[15] = {
    -0.991455371120813, -0.949107912342759, -0.864864423359769,
    -0.741531185599394, -0.586087235467691, -0.405845151377397,
    -0.207784955007898, 0.0,
    0.207784955007898,  0.405845151377397,  0.586087235467691,
    0.741531185599394,  0.864864423359769,  0.949107912342759,
    0.991455371120813};
const double kKronrodWeights[15] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
    0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979,
    0.022935322010529};
const double kGaussWeights[7] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469, 0.381830050505119, 0.279705391489277,
    0.129484966168870};

struct Panel {
  Real a, b;
  Complex value;
  Real error;
};

Panel eval_panel(const std::function<Complex(Real)>& f, Real a, Real b) {
  const Real c = 0.5 * (a + b), h = 0.5 * (b - a);
  Complex kron = 0.0, gauss = 0.0;
  for (int i = 0; i < 15; ++i) {
    const Complex fv = f(c + h * kKronrodNodes[i]);
    kron += kKronrodWeights[i] * fv;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fv;
  }
  kron *= h;
  gauss *= h;
  const Real diff = std::abs(kron - gauss);
  // Standard QUADPACK-style error sharpening.
  const Real err = diff > 0 ? diff * std::min(1.0, std::pow(200.0 * diff, 1.5)) : 0.0;
  return Panel{a, b, kron, std::max(err, 1e-300)};
}

}  // namespace

Result integrate(const std::function<Complex(Real)>& f, Real a, Real b,
                 Real abs_tol, int max_panels) {
  if (!(b > a)) return {0.0, 0.0};
  auto cmp = [](const Panel& p, const Panel& q) { return p.error < q.error; };
  std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> heap(cmp);
  // Seed with a few panels so narrow features are not missed outright.
  const int seed = 8;
  Complex total = 0.0;
  Real total_err = 0.0;
  for (int i = 0; i < seed; ++i) {
    Panel p = eval_panel(f, a + (b - a) * i / seed, a + (b - a) * (i + 1) / seed);
    total += p.value;
    total_err += p.error;
    heap.push(p);
  }
  int used = seed;
  while (total_err > abs_tol && used < max_panels) {
    Panel worst = heap.top();
    heap.pop();
    total -= worst.value;
    total_err -= worst.error;
    const Real mid = 0.5 * (worst.a + worst.b);
    for (Panel half : {eval_panel(f, worst.a, mid), eval_panel(f, mid, worst.b)}) {
      total += half.value;
      total_err += half.error;
      heap.push(half);
    }
    used += 2;
  }
  if (total_err > abs_tol * 50 + 1e-290)
    throw numerical_error("adaptive quadrature did not converge: error estimate " +
                          std::to_string(total_err) + " over [" + std::to_string(a) +
                          ", " + std::to_string(b) + "]");
  return {total, total_err};
}

Result integrate_log_axis(const std::function<Complex(Real)>& f_of_r,
                          Real abs_tol, Real s_lo, Real s_hi) {
  auto g = [&](Real s) { return f_of_r(std::exp(s)); };
  // Expand the window while the endpoints still carry mass.
  for (int i = 0; i < 8; ++i) {
    if (std::abs(g(s_lo)) > 1e-14) s_lo -= 10; else break;
  }
  for (int i = 0; i < 8; ++i) {
    if (std::abs(g(s_hi)) > 1e-14) s_hi += 10; else break;
  }
  return integrate(g, s_lo, s_hi, abs_tol, 8000);
}

ArrayXd trapezoid_weights(const ArrayXd& x) {
  const int n = static_cast<int>(x.size());
  ArrayXd w = ArrayXd::Zero(n);
  if (n < 2) return w;
  for (int i = 0; i + 1 < n; ++i) {
    const Real h = x[i + 1] - x[i];
    w[i] += 0.5 * h;
    w[i + 1] += 0.5 * h;
  }
  return w;
}

Complex certified_sum(const std::function<Complex(long long)>& term,
                      long long start, Real tol, long long cap, int quorum) {
  Complex s = 0.0;
  int quiet = 0;
  for (long long n = start; n < start + cap; ++n) {
    const Complex t = term(n);
    s += t;
    if (std::abs(t) < tol * (std::abs(s) + 1.0)) {
      if (++quiet >= quorum) return s;
    } else {
      quiet = 0;
    }
  }
  throw numerical_error("certified_sum: series truncation bound unattainable within cap");
}

}  // namespace asco::quad
