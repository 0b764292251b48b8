#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gaitadapt {

/// Scaled relative time within one walking step. All desired outputs are
/// synchronized on the emitted tau in [0, 1].
struct PhaseClock {
  double t_minus = 0.0;  // time at the start of the current step [s]
  double t_step = 0.4;   // step duration [s], > 0
};

inline double phase(const PhaseClock& clock, double t) {
  if (!(clock.t_step > 0.0)) {
    throw std::invalid_argument("PhaseClock: t_step must be positive");
  }
  if (t < clock.t_minus) {
    throw std::invalid_argument("phase: query time precedes step start");
  }
  const double tau = (t - clock.t_minus) / clock.t_step;
  return std::clamp(tau, 0.0, 1.0);
}

namespace detail {

// Exact for the small degrees used here (<= 7 in practice).
inline double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) {
    c *= static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return c;
}

}  // namespace detail

/// Bernstein-basis evaluation of a Bezier polynomial at tau in [0, 1].
/// Direct sum over the basis; accurate enough for low-degree gait outputs.
template <typename Derived>
typename Derived::Scalar bezier_eval(const Eigen::MatrixBase<Derived>& coeffs,
                                     typename Derived::Scalar tau) {
  using Scalar = typename Derived::Scalar;
  if (coeffs.size() < 2) {
    throw std::invalid_argument("bezier_eval: need at least 2 coefficients");
  }
  if (tau < Scalar(0) || tau > Scalar(1)) {
    throw std::domain_error("bezier_eval: tau outside [0, 1]");
  }
  const int deg = static_cast<int>(coeffs.size()) - 1;
  const Scalar omt = Scalar(1) - tau;
  Scalar value(0);
  Scalar tp(1);  // tau^k, built up incrementally
  for (int k = 0; k <= deg; ++k) {
    Scalar term = coeffs(k) * Scalar(detail::binomial(deg, k)) * tp;
    for (int j = 0; j < deg - k; ++j) term *= omt;
    value += term;
    tp *= tau;
  }
  return value;
}

/// Analytic derivative of the Bernstein form with respect to tau.
template <typename Derived>
typename Derived::Scalar bezier_deriv(const Eigen::MatrixBase<Derived>& coeffs,
                                      typename Derived::Scalar tau) {
  using Scalar = typename Derived::Scalar;
  if (coeffs.size() < 2) {
    throw std::invalid_argument("bezier_deriv: need at least 2 coefficients");
  }
  if (tau < Scalar(0) || tau > Scalar(1)) {
    throw std::domain_error("bezier_deriv: tau outside [0, 1]");
  }
  const int deg = static_cast<int>(coeffs.size()) - 1;
  // d/dtau B(tau) = M * sum_k (a_{k+1} - a_k) C(M-1,k) tau^k (1-tau)^(M-1-k)
  const Scalar omt = Scalar(1) - tau;
  Scalar value(0);
  Scalar tp(1);
  for (int k = 0; k <= deg - 1; ++k) {
    Scalar term =
        (coeffs(k + 1) - coeffs(k)) * Scalar(detail::binomial(deg - 1, k)) * tp;
    for (int j = 0; j < deg - 1 - k; ++j) term *= omt;
    value += term;
    tp *= tau;
  }
  return Scalar(deg) * value;
}

/// Owning convenience wrapper around a coefficient vector.
class BezierCurve {
 public:
  BezierCurve() : coeffs_(Eigen::Vector2d::Zero()) {}

  explicit BezierCurve(Eigen::VectorXd coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) {
      throw std::invalid_argument("BezierCurve: need at least 2 coefficients");
    }
  }

  double eval(double tau) const { return bezier_eval(coeffs_, tau); }
  double deriv(double tau) const { return bezier_deriv(coeffs_, tau); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Eigen::VectorXd& coeffs() const { return coeffs_; }

 private:
  Eigen::VectorXd coeffs_;
};

}  // namespace gaitadapt
