#include "gaitadapt/biped_model.hpp"

#include <cmath>

namespace gaitadapt {

double ModelParams::lambda() const { return std::sqrt(g / h); }

namespace {

bool all_finite(const RobotState& s) {
  return std::isfinite(s.x) && std::isfinite(s.y) && std::isfinite(s.vx) &&
         std::isfinite(s.vy) && std::isfinite(s.phi) &&
         std::isfinite(s.phidot) && std::isfinite(s.px) && std::isfinite(s.py);
}

// q = (x, y, vx, vy, phi, phidot) in world coordinates; the stance foot is
// fixed at (px, py) for the whole continuous phase.
ContDeriv dynamics_at(const Eigen::Matrix<double, 6, 1>& q, double px,
                      double py, const PlantCommand& u, const ModelParams& p,
                      const Disturbance& d) {
  const double xdd = (p.g / p.h) * (q(0) + p.c_x - px) -
                     u.tau_f / (p.m * p.h) + d.f_ext_x / p.m -
                     p.g * std::sin(d.slope_theta);
  const double ydd = (p.g / p.h) * (q(1) - py) + d.f_ext_y / p.m;
  const double phidd = (u.tau_f - p.m * p.g * p.c_x) / p.inertia();
  ContDeriv dq;
  dq << q(2), q(3), xdd, ydd, q(5), phidd;
  return dq;
}

Eigen::Matrix<double, 6, 1> pack(const RobotState& s) {
  Eigen::Matrix<double, 6, 1> q;
  q << s.x, s.y, s.vx, s.vy, s.phi, s.phidot;
  return q;
}

}  // namespace

ContDeriv continuous_dynamics(const RobotState& s, const PlantCommand& u,
                              const ModelParams& p, const Disturbance& d) {
  p.validate();
  if (!all_finite(s)) {
    throw NumericError("continuous_dynamics: non-finite state");
  }
  return dynamics_at(pack(s), s.px, s.py, u, p, d);
}

RobotState integrate_step(const RobotState& s, const PlantCommand& u,
                          const ModelParams& p, const Disturbance& d,
                          double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("integrate_step: dt must be > 0");
  p.validate();
  if (!all_finite(s)) throw NumericError("integrate_step: non-finite state");

  Eigen::Matrix<double, 6, 1> q = pack(s);
  const ContDeriv k1 = dynamics_at(q, s.px, s.py, u, p, d);
  const ContDeriv k2 = dynamics_at(q + 0.5 * dt * k1, s.px, s.py, u, p, d);
  const ContDeriv k3 = dynamics_at(q + 0.5 * dt * k2, s.px, s.py, u, p, d);
  const ContDeriv k4 = dynamics_at(q + dt * k3, s.px, s.py, u, p, d);
  q += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

  RobotState out = s;
  out.x = q(0);
  out.y = q(1);
  out.vx = q(2);
  out.vy = q(3);
  out.phi = q(4);
  out.phidot = q(5);
  out.t = s.t + dt;
  if (!all_finite(out)) throw NumericError("integrate_step: state diverged");
  return out;
}

std::pair<double, double> closed_form_lip(double x0, double v0, double p_foot,
                                          const ModelParams& p, double t) {
  p.validate();
  const double lam = p.lambda();
  const double c = std::cosh(lam * t);
  const double s = std::sinh(lam * t);
  const double xi = x0 - p_foot;
  return {p_foot + xi * c + (v0 / lam) * s, lam * xi * s + v0 * c};
}

RobotState step_transition(const RobotState& s, const Eigen::Vector2d& landing,
                           const ModelParams& p) {
  p.validate();
  if (!landing.allFinite()) {
    throw std::invalid_argument("step_transition: non-finite landing");
  }
  RobotState out = s;
  out.px += landing.x() + p.lean_arm * std::sin(s.phi);
  out.py += landing.y();
  out.stance_side = other(s.stance_side);
  out.k += 1;
  out.vx *= p.rho;
  out.vy *= p.rho;
  return out;
}

bool is_fallen(const RobotState& s, const ModelParams& p) {
  (void)p;
  return std::abs(s.phi) > 0.8 || std::abs(s.x - s.px) > 1.5 ||
         std::abs(s.vx) > 3.0 || std::abs(s.vy) > 2.0;
}

}  // namespace gaitadapt
