#ifndef ASYMPTOSCOPE_TYPES_HPP
#define ASYMPTOSCOPE_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace asco {

using Real = double;
using Complex = std::complex<double>;

using Eigen::ArrayXd;
using Eigen::ArrayXcd;
using Eigen::ArrayXXcd;
using Eigen::VectorXd;
using Eigen::MatrixXd;

inline constexpr Real kPi = 3.14159265358979323846264338327950288;

/// Bad arguments, domain violations, malformed inputs.  CLI exit code 2.
class validation_error : public std::invalid_argument {
 public:
  explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Quadrature non-convergence, uncertifiable truncation, failed extrapolation.
/// CLI exit code 3.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

/// A kernel whose Fourier transform vanishes identically on a ray.
class degeneracy_error : public validation_error {
 public:
  explicit degeneracy_error(const std::string& what) : validation_error(what) {}
};

inline ArrayXd log_spaced(Real lo, Real hi, int n) {
  if (!(lo > 0) || !(hi > lo) || n < 2) throw validation_error("log_spaced: need 0 < lo < hi, n >= 2");
  ArrayXd t = ArrayXd::LinSpaced(n, std::log(lo), std::log(hi));
  return t.exp();
}

}  // namespace asco

#endif  // ASYMPTOSCOPE_TYPES_HPP
