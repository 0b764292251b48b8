#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <utility>

namespace gaitadapt {

/// Raised when the plant state stops being finite.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class StanceSide : std::uint8_t { Left, Right };

inline StanceSide other(StanceSide s) {
  return s == StanceSide::Left ? StanceSide::Right : StanceSide::Left;
}

/// Hybrid state of the reduced-order biped: pelvis kinematics, torso pitch,
/// current stance foot, and step bookkeeping.
struct RobotState {
  double x = 0.0;    // pelvis longitudinal position [m]
  double y = 0.0;    // pelvis lateral position [m]
  double vx = 0.0;   // pelvis longitudinal velocity [m/s]
  double vy = 0.0;   // pelvis lateral velocity [m/s]
  double phi = 0.0;      // torso pitch [rad]
  double phidot = 0.0;   // torso pitch rate [rad/s]
  double px = 0.0;   // stance foot longitudinal position [m]
  double py = 0.0;   // stance foot lateral position [m]
  StanceSide stance_side = StanceSide::Left;
  int k = 0;         // step index
  double t = 0.0;    // time [s]
};

/// True plant parameters. m and c_x are the uncertainty channels: the
/// controller never reads them, only the plant does.
struct ModelParams {
  double m = 10.33;       // torso mass [kg]
  double r_gyr = 0.3;     // torso radius of gyration [m]; J = m * r_gyr^2
  double h = 0.9;         // pendulum height [m]
  double c_x = 0.0;       // longitudinal COM offset [m]
  double g = 9.81;        // gravity [m/s^2]
  double t_step = 0.4;    // step duration [s]
  double rho = 1.0;       // impact velocity retention in (0, 1]
  double W = 0.2;         // nominal lateral step width [m]
  double tau_f_max = 60.0;  // torso torque limit [N*m]
  // Effective lever from torso pitch to realized foot placement: the swing
  // leg hangs from the pitched body, so a commanded landing is executed
  // short or long by lean_arm * sin(phi).
  double lean_arm = 0.25;  // [m]

  double inertia() const { return m * r_gyr * r_gyr; }
  double lambda() const;  // sqrt(g/h), the LIP time constant

  void validate() const {
    if (!(m > 0.0)) throw std::invalid_argument("ModelParams: m must be > 0");
    if (!(h > 0.0)) throw std::invalid_argument("ModelParams: h must be > 0");
    if (!(t_step > 0.0))
      throw std::invalid_argument("ModelParams: t_step must be > 0");
    if (!(rho > 0.0 && rho <= 1.0))
      throw std::invalid_argument("ModelParams: rho must be in (0, 1]");
    if (!(tau_f_max > 0.0))
      throw std::invalid_argument("ModelParams: tau_f_max must be > 0");
    if (!(r_gyr > 0.0))
      throw std::invalid_argument("ModelParams: r_gyr must be > 0");
  }
};

/// External disturbances held constant across one integration step.
struct Disturbance {
  double f_ext_x = 0.0;      // torso-applied force [N]
  double f_ext_y = 0.0;      // torso-applied force [N]
  double slope_theta = 0.0;  // ground slope for the current step [rad]
};

/// Actuation of the reduced plant: the torso/flywheel torque.
struct PlantCommand {
  double tau_f = 0.0;  // [N*m]
};

inline PlantCommand saturate(PlantCommand u, const ModelParams& p) {
  if (u.tau_f > p.tau_f_max) u.tau_f = p.tau_f_max;
  if (u.tau_f < -p.tau_f_max) u.tau_f = -p.tau_f_max;
  return u;
}

/// Time derivative of the continuous part of RobotState,
/// ordered (x, y, vx, vy, phi, phidot).
using ContDeriv = Eigen::Matrix<double, 6, 1>;

ContDeriv continuous_dynamics(const RobotState& s, const PlantCommand& u,
                              const ModelParams& p, const Disturbance& d);

/// One fixed-step RK4 advance of the continuous dynamics; foot position,
/// stance side and step index are untouched, time advances by dt.
RobotState integrate_step(const RobotState& s, const PlantCommand& u,
                          const ModelParams& p, const Disturbance& d,
                          double dt);

/// Closed-form linear-inverted-pendulum stance solution, used as the test
/// oracle for the integrator. Valid when torque, COM offset and disturbances
/// are all zero.
std::pair<double, double> closed_form_lip(double x0, double v0, double p_foot,
                                          const ModelParams& p, double t);

/// Reset map at the end of a step: move the stance foot by the landing
/// displacement, toggle sides, retain rho of the pelvis velocity. Pelvis
/// position and torso state are continuous through the transition.
/// The commanded landing is realized through the pitched body, so the foot
/// actually advances by dx + lean_arm * sin(phi) longitudinally.
RobotState step_transition(const RobotState& s, const Eigen::Vector2d& landing,
                           const ModelParams& p);

/// Fall predicate used to terminate scenarios.
bool is_fallen(const RobotState& s, const ModelParams& p);

}  // namespace gaitadapt
