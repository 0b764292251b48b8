#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace gaitadapt {

/// Inputs of one adaptive network: actual and desired velocity, torso
/// inclination and torso rate.
struct NetworkInput {
  double v_x = 0.0;
  double v_x_d = 0.0;
  double v_y = 0.0;
  double v_y_d = 0.0;
  double phi = 0.0;
  double phi_d = 0.0;
  double phidot = 0.0;
  double phidot_d = 0.0;

  Eigen::Matrix<double, 8, 1> vector() const {
    Eigen::Matrix<double, 8, 1> v;
    v << v_x, v_x_d, v_y, v_y_d, phi, phi_d, phidot, phidot_d;
    return v;
  }
};

/// One-hidden-layer network with fixed random encoders and a learned linear
/// readout. Hidden units are rectified tuning curves: unit-norm preferred
/// directions with gains and biases derived from uniformly sampled
/// intercepts, so the basis covers the (normalized) input space. Only the
/// output weights ever change, via the delta rule; encoders, gains and
/// biases are frozen at construction.
class AdaptiveNetwork {
 public:
  AdaptiveNetwork(std::uint64_t seed, int n_hidden, int input_dim,
                  int output_dim, double gamma,
                  const Eigen::VectorXd& input_scales);

  /// 1000 hidden units, the 8-dimensional tracking input, gamma = 1e-4,
  /// and the default normalization (velocities / 1.0, angles / 0.5,
  /// rates / 2.0).
  static AdaptiveNetwork make_default(std::uint64_t seed, int output_dim);
  static Eigen::VectorXd default_input_scales();

  /// Rectified tuning-curve activations for a raw (unnormalized) input.
  Eigen::VectorXd hidden(const Eigen::VectorXd& x) const;

  /// W_out^T * hidden(x), with masked channels forced to zero.
  Eigen::VectorXd forward(const Eigen::VectorXd& x) const;
  Eigen::VectorXd forward_from_hidden(const Eigen::VectorXd& h) const;

  /// Delta-rule update: W_out(i, j) += -gamma * error(j) * h(i) for every
  /// unmasked output j. Masked columns are frozen.
  void update(const Eigen::VectorXd& error, const Eigen::VectorXd& h);

  void mask_channel(int j, bool on);
  bool masked(int j) const;

  int n_hidden() const { return static_cast<int>(encoders_.rows()); }
  int input_dim() const { return static_cast<int>(encoders_.cols()); }
  int output_dim() const { return static_cast<int>(w_out_.cols()); }
  double gamma() const { return gamma_; }
  std::uint64_t seed() const { return seed_; }

  const Eigen::MatrixXd& encoders() const { return encoders_; }
  const Eigen::VectorXd& gains() const { return gains_; }
  const Eigen::VectorXd& biases() const { return biases_; }
  const Eigen::MatrixXd& output_weights() const { return w_out_; }
  const Eigen::VectorXd& input_scales() const { return input_scales_; }

  /// Restore a previously serialized readout (dimensions must match).
  void set_output_weights(const Eigen::MatrixXd& w);

 private:
  std::uint64_t seed_;
  double gamma_;
  Eigen::MatrixXd encoders_;  // n_hidden x input_dim, unit rows
  Eigen::VectorXd gains_;     // n_hidden
  Eigen::VectorXd biases_;    // n_hidden
  Eigen::MatrixXd w_out_;     // n_hidden x output_dim
  Eigen::VectorXd input_scales_;
  std::vector<bool> masked_;
};

}  // namespace gaitadapt
