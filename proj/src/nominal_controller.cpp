#include "gaitadapt/nominal_controller.hpp"

#include <cmath>
#include <stdexcept>

namespace gaitadapt {

Eigen::VectorXd virtual_constraint_error(const Eigen::VectorXd& y_a,
                                         const Eigen::VectorXd& y_d,
                                         const Eigen::VectorXd& delta_y) {
  if (y_a.size() != y_d.size() || y_a.size() != delta_y.size()) {
    throw std::invalid_argument("virtual_constraint_error: layout mismatch");
  }
  return y_a - (y_d + delta_y);
}

SwingProfile::SwingProfile()
    : curve_(Eigen::Vector2d::Zero()), tau0_(0.0) {}

SwingProfile::SwingProfile(BezierCurve curve, double tau0)
    : curve_(std::move(curve)), tau0_(tau0) {}

SwingProfile SwingProfile::full_step(double start, double target) {
  Eigen::VectorXd c(6);
  const double mid = 0.5 * (start + target);
  c << start, start, mid, mid, target, target;
  return SwingProfile(BezierCurve(c), 0.0);
}

double SwingProfile::local(double tau) const {
  if (tau <= tau0_) return 0.0;
  if (tau >= 1.0) return 1.0;
  return (tau - tau0_) / (1.0 - tau0_);
}

void SwingProfile::refit(double tau0, double new_target) {
  if (!(tau0 >= 0.0 && tau0 < 1.0)) {
    throw std::invalid_argument("SwingProfile::refit: tau0 must be in [0, 1)");
  }
  const double v0 = value(tau0);
  const double r0 = rate(tau0);  // global phase rate
  const double span = 1.0 - tau0;
  const double r_local = r0 * span;

  Eigen::VectorXd c(6);
  c(0) = v0;
  c(1) = v0 + r_local / 5.0;  // derivative continuity at the latch point
  c(4) = new_target;
  c(5) = new_target;          // zero terminal rate
  c(2) = c(1) + (c(4) - c(1)) / 3.0;
  c(3) = c(1) + 2.0 * (c(4) - c(1)) / 3.0;
  curve_ = BezierCurve(c);
  tau0_ = tau0;
}

double SwingProfile::value(double tau) const { return curve_.eval(local(tau)); }

double SwingProfile::rate(double tau) const {
  return curve_.deriv(local(tau)) / (1.0 - tau0_);
}

double SwingProfile::target() const {
  return curve_.coeffs()(curve_.coeffs().size() - 1);
}

NominalGait nominal_gait_update(const Eigen::Vector2d& v_d,
                                const RobotState& s, const ModelParams& p,
                                const Eigen::Vector2d& swing_start) {
  if (std::abs(v_d.x()) > 1.5 || std::abs(v_d.y()) > 1.5) {
    throw std::invalid_argument(
        "nominal_gait_update: reference speed out of range");
  }
  p.validate();
  NominalGait gait;
  gait.v_d_x = v_d.x();
  gait.v_d_y = v_d.y();
  gait.s_nom_x = v_d.x() * p.t_step;
  // The swing foot crosses over to the other side of the stance foot.
  const double side = s.stance_side == StanceSide::Left ? -1.0 : 1.0;
  gait.lateral_target = side * p.W + v_d.y() * p.t_step;
  gait.swing_x = SwingProfile::full_step(swing_start.x(), gait.s_nom_x);
  gait.swing_y = SwingProfile::full_step(swing_start.y(), gait.lateral_target);
  return gait;
}

PlantCommand inner_loop_torque(double y2_phi, double y2dot_phi,
                               const TorsoGains& g, const ModelParams& p) {
  PlantCommand u;
  u.tau_f = -g.kp * y2_phi - g.kd * y2dot_phi;
  return saturate(u, p);
}

Eigen::Vector2d landing_command(const NominalGait& gait, const DeltaY& dy) {
  return {gait.s_nom_x + dy.hip + dy.knee,
          gait.lateral_target + dy.swhr + dy.sthr};
}

}  // namespace gaitadapt
