#include "gaitadapt/adaptive_net.hpp"

#include <random>
#include <stdexcept>

namespace gaitadapt {

AdaptiveNetwork::AdaptiveNetwork(std::uint64_t seed, int n_hidden,
                                 int input_dim, int output_dim, double gamma,
                                 const Eigen::VectorXd& input_scales)
    : seed_(seed), gamma_(gamma) {
  if (n_hidden < 1) {
    throw std::invalid_argument("AdaptiveNetwork: n_hidden must be >= 1");
  }
  if (input_dim < 1 || output_dim < 1) {
    throw std::invalid_argument("AdaptiveNetwork: invalid dimensions");
  }
  if (input_scales.size() != input_dim) {
    throw std::invalid_argument("AdaptiveNetwork: input_scales size mismatch");
  }
  if ((input_scales.array() <= 0.0).any()) {
    throw std::invalid_argument("AdaptiveNetwork: input_scales must be > 0");
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);

  // Preferred directions: normalized standard-normal draws, i.e. uniform on
  // the unit hypersphere.
  encoders_.resize(n_hidden, input_dim);
  for (int i = 0; i < n_hidden; ++i) {
    double norm2 = 0.0;
    do {
      for (int j = 0; j < input_dim; ++j) encoders_(i, j) = normal(rng);
      norm2 = encoders_.row(i).squaredNorm();
    } while (norm2 < 1e-24);
    encoders_.row(i) /= std::sqrt(norm2);
  }

  // Intercept xi in (-1, 1) maps to gain 1/(1-xi) and bias -xi/(1-xi):
  // the unit switches on where the projection crosses xi and reaches
  // activation 1 on-direction at unit input norm.
  gains_.resize(n_hidden);
  biases_.resize(n_hidden);
  for (int i = 0; i < n_hidden; ++i) {
    const double xi = uniform(rng);
    gains_(i) = 1.0 / (1.0 - xi);
    biases_(i) = -xi / (1.0 - xi);
  }

  w_out_ = Eigen::MatrixXd::Zero(n_hidden, output_dim);
  input_scales_ = input_scales;
  masked_.assign(static_cast<std::size_t>(output_dim), false);
}

Eigen::VectorXd AdaptiveNetwork::default_input_scales() {
  Eigen::VectorXd s(8);
  s << 1.0, 1.0, 1.0, 1.0, 0.5, 0.5, 2.0, 2.0;
  return s;
}

AdaptiveNetwork AdaptiveNetwork::make_default(std::uint64_t seed,
                                              int output_dim) {
  return AdaptiveNetwork(seed, 1000, 8, output_dim, 1e-4,
                         default_input_scales());
}

Eigen::VectorXd AdaptiveNetwork::hidden(const Eigen::VectorXd& x) const {
  if (x.size() != input_dim()) {
    throw std::invalid_argument("AdaptiveNetwork::hidden: input size mismatch");
  }
  const Eigen::VectorXd x_norm = x.cwiseQuotient(input_scales_);
  return (gains_.cwiseProduct(encoders_ * x_norm) + biases_).cwiseMax(0.0);
}

Eigen::VectorXd AdaptiveNetwork::forward_from_hidden(
    const Eigen::VectorXd& h) const {
  if (h.size() != n_hidden()) {
    throw std::invalid_argument("AdaptiveNetwork: hidden size mismatch");
  }
  Eigen::VectorXd psi = w_out_.transpose() * h;
  for (int j = 0; j < output_dim(); ++j) {
    if (masked_[static_cast<std::size_t>(j)]) psi(j) = 0.0;
  }
  return psi;
}

Eigen::VectorXd AdaptiveNetwork::forward(const Eigen::VectorXd& x) const {
  return forward_from_hidden(hidden(x));
}

void AdaptiveNetwork::update(const Eigen::VectorXd& error,
                             const Eigen::VectorXd& h) {
  if (error.size() != output_dim()) {
    throw std::invalid_argument("AdaptiveNetwork::update: error size mismatch");
  }
  if (h.size() != n_hidden()) {
    throw std::invalid_argument("AdaptiveNetwork::update: hidden size mismatch");
  }
  for (int j = 0; j < output_dim(); ++j) {
    if (masked_[static_cast<std::size_t>(j)]) continue;
    w_out_.col(j) -= gamma_ * error(j) * h;
  }
}

void AdaptiveNetwork::mask_channel(int j, bool on) {
  if (j < 0 || j >= output_dim()) {
    throw std::out_of_range("AdaptiveNetwork::mask_channel: bad channel index");
  }
  masked_[static_cast<std::size_t>(j)] = on;
}

bool AdaptiveNetwork::masked(int j) const {
  if (j < 0 || j >= output_dim()) {
    throw std::out_of_range("AdaptiveNetwork::masked: bad channel index");
  }
  return masked_[static_cast<std::size_t>(j)];
}

void AdaptiveNetwork::set_output_weights(const Eigen::MatrixXd& w) {
  if (w.rows() != w_out_.rows() || w.cols() != w_out_.cols()) {
    throw std::invalid_argument(
        "AdaptiveNetwork::set_output_weights: shape mismatch");
  }
  w_out_ = w;
}

}  // namespace gaitadapt
