#pragma once

#include <Eigen/Core>

namespace gaitadapt {

/// Manually tuned feedback gains of the step-to-step regulators. The torso
/// row is exposed but defaults to zero: the inner loop already closes a PD
/// on torso pitch, and doubling it up just fights the adaptation.
struct RegulatorGains {
  double kp_x = 0.20;  // m per (m/s)
  double kd_x = 0.10;
  double kp_y = 0.20;
  double kd_y = 0.10;
  double kp_phi = 0.0;  // rad per rad
  double kd_phi = 0.0;  // rad per (rad/s)
};

/// Trajectory offsets for the current step, one entry per regulated output
/// channel. hip/knee act on the longitudinal landing, swhr/sthr (swing and
/// stance hip roll) on the lateral landing, phi on the torso reference.
struct DeltaY {
  double hip = 0.0;
  double knee = 0.0;
  double swhr = 0.0;
  double sthr = 0.0;
  double phi = 0.0;

  /// Collapse the redundant pairs onto the three regulated outputs
  /// (longitudinal, lateral, torso).
  Eigen::Vector3d collapse() const {
    return {hip + knee, swhr + sthr, phi};
  }
};

/// Network feedforward terms per decoupled subsystem; all zero when the
/// adaptation is disabled.
struct PsiOutputs {
  Eigen::Vector2d x = Eigen::Vector2d::Zero();
  Eigen::Vector2d y = Eigen::Vector2d::Zero();
  double phi = 0.0;
};

/// Step-to-step measurements consumed by the regulators.
struct StepMeasurement {
  double v_x = 0.0;       // average longitudinal speed of step k
  double v_x_prev = 0.0;  // same, step k-1
  double v_y = 0.0;
  double v_y_prev = 0.0;
  double phi = 0.0;     // torso pitch at the measurement event
  double phidot = 0.0;  // torso pitch rate at the measurement event
};

struct TrackingReferences {
  double v_d_x = 0.0;
  double v_d_y = 0.0;
  double phi_d = 0.0;
  double phidot_d = 0.0;
};

/// Longitudinal foot-placement offset: lengthen the step when walking too
/// fast, with a damping term on the step-to-step speed change.
inline double foot_placement_x(double v_k, double v_prev, double v_d,
                               const RegulatorGains& g) {
  return g.kp_x * (v_k - v_d) + g.kd_x * (v_k - v_prev);
}

/// Lateral counterpart acting on the hip-roll channels.
inline double foot_placement_y(double v_k, double v_prev, double v_d,
                               const RegulatorGains& g) {
  return g.kp_y * (v_k - v_d) + g.kd_y * (v_k - v_prev);
}

/// Combine the heuristic PD regulators with the network feedforward into
/// the per-channel trajectory offsets. The PD term goes to the first channel
/// of each redundant pair; the network reaches every channel.
inline DeltaY assemble_delta_y(const StepMeasurement& m,
                               const TrackingReferences& r,
                               const RegulatorGains& g, const PsiOutputs& psi) {
  DeltaY dy;
  dy.hip = foot_placement_x(m.v_x, m.v_x_prev, r.v_d_x, g) + psi.x(0);
  dy.knee = psi.x(1);
  dy.swhr = foot_placement_y(m.v_y, m.v_y_prev, r.v_d_y, g) + psi.y(0);
  dy.sthr = psi.y(1);
  dy.phi = g.kp_phi * (m.phi - r.phi_d) + g.kd_phi * (m.phidot - r.phidot_d) +
           psi.phi;
  return dy;
}

/// Per-step regulator memory: previous step's average velocities and the
/// offsets latched for the current step.
struct RegulatorState {
  double v_prev_x = 0.0;
  double v_prev_y = 0.0;
  bool primed = false;  // v_prev holds a real measurement
  DeltaY latched;
  RegulatorGains gains;
};

}  // namespace gaitadapt
