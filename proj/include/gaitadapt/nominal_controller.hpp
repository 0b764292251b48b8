#pragma once

#include <Eigen/Core>

#include "gaitadapt/biped_model.hpp"
#include "gaitadapt/gait_phase.hpp"
#include "gaitadapt/regulators.hpp"

namespace gaitadapt {

/// Actual and desired output vectors (swing-foot longitudinal offset,
/// swing-foot lateral offset, torso pitch), plus the shifted tracking error.
struct OutputSet {
  Eigen::VectorXd y_a;
  Eigen::VectorXd y_d;
};

/// Output tracking error with the adaptive shift: y_a - (y_d + delta_y).
/// All three vectors must share the same layout.
Eigen::VectorXd virtual_constraint_error(const Eigen::VectorXd& y_a,
                                         const Eigen::VectorXd& y_d,
                                         const Eigen::VectorXd& delta_y);

/// Inner-loop torso PD gains, tuned once for the nominal plant and never
/// retuned under uncertainty.
struct TorsoGains {
  double kp = 80.0;  // N*m per rad
  double kd = 8.0;   // N*m per (rad/s)
};

/// Degree-5 swing trajectory over the remaining phase of a step. Supports
/// re-aiming mid-step while keeping value and rate continuous.
class SwingProfile {
 public:
  SwingProfile();

  /// Whole-step profile from a start offset (zero rate) to a target offset
  /// (zero rate).
  static SwingProfile full_step(double start, double target);

  /// Re-aim at a new target from the current point of the profile; the value
  /// and phase-rate at tau0 are preserved, the endpoint rate stays zero.
  void refit(double tau0, double new_target);

  double value(double tau) const;  // tau is the global step phase
  double rate(double tau) const;   // d(value)/d(tau)
  double target() const;

 private:
  SwingProfile(BezierCurve curve, double tau0);
  double local(double tau) const;

  BezierCurve curve_;  // spans [tau0_, 1] of the global phase
  double tau0_ = 0.0;
};

/// Per-step desired motion: reference speeds, torso reference, nominal
/// landing targets and the swing trajectories that realize them.
struct NominalGait {
  double v_d_x = 0.0;
  double v_d_y = 0.0;
  double phi_d = 0.0;
  double phidot_d = 0.0;
  double s_nom_x = 0.0;        // nominal longitudinal step length [m]
  double lateral_target = 0.0;  // nominal lateral landing offset [m]
  SwingProfile swing_x;
  SwingProfile swing_y;

  Eigen::Vector3d desired_outputs(double tau) const {
    return {swing_x.value(tau), swing_y.value(tau), phi_d};
  }
};

/// Build the gait for a new step: analytic step-length map
/// s_nom_x = v_d_x * t_step, alternating lateral width, and fresh swing
/// curves from the current swing-foot offset to the nominal targets.
/// swing_start is the swing foot position relative to the stance foot at
/// the start of the step.
NominalGait nominal_gait_update(const Eigen::Vector2d& v_d,
                                const RobotState& s, const ModelParams& p,
                                const Eigen::Vector2d& swing_start);

/// Torso tracking torque: PD on the shifted pitch error, saturated at the
/// actuator limit.
PlantCommand inner_loop_torque(double y2_phi, double y2dot_phi,
                               const TorsoGains& g, const ModelParams& p);

/// Landing displacement consumed by the step transition: nominal targets
/// plus the latched per-channel offsets (redundant pairs sum).
Eigen::Vector2d landing_command(const NominalGait& gait, const DeltaY& dy);

}  // namespace gaitadapt
