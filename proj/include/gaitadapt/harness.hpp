#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gaitadapt/adaptive_net.hpp"
#include "gaitadapt/biped_model.hpp"
#include "gaitadapt/nominal_controller.hpp"
#include "gaitadapt/regulators.hpp"

namespace gaitadapt {

// ---------------------------------------------------------------------------
// Scenario description

/// Constant reference-speed segment starting at t_start.
struct VdSegment {
  double t_start = 0.0;
  double v_x = 0.0;
  double v_y = 0.0;
};

enum class PushDirection : std::uint8_t { PosX, NegX, PosY, NegY };
enum class NetId : std::uint8_t { X, Y, Phi };

struct SetMassEvent {
  double t = 0.0;
  double mass = 10.33;  // new torso mass [kg]
};
struct SetComOffsetEvent {
  double t = 0.0;
  double c_x = 0.0;  // new longitudinal COM offset [m]
};
struct PushEvent {
  double t = 0.0;
  double force = 0.0;     // [N]
  double duration = 0.1;  // [s]
  PushDirection direction = PushDirection::PosX;
};
struct TerrainEvent {
  double t_start = 0.0;
  double max_slope = 0.0;  // [rad]; per-step slope ~ U(-max, +max)
};
struct MaskChannelEvent {
  double t = 0.0;
  NetId net = NetId::X;
  int channel = 0;
};

using ScenarioEvent = std::variant<SetMassEvent, SetComOffsetEvent, PushEvent,
                                   TerrainEvent, MaskChannelEvent>;

double event_time(const ScenarioEvent& e);

/// Declarative description of one closed-loop experiment.
struct ScenarioConfig {
  std::string name = "scenario";
  std::uint64_t seed = 0;
  double duration = 60.0;  // [s]
  double dt = 1e-3;        // [s]
  std::vector<VdSegment> profile{{0.0, 0.5, 0.0}};
  std::vector<ScenarioEvent> events;  // sorted by time
  bool adaptive_enabled = true;
  bool update_per_tick = false;  // delta-rule cadence: per step (default) or
                                 // per tick with gamma rescaled by dt/t_step
  bool must_not_fall = true;
  bool compare_arms = false;  // run both adaptive on/off arms for comparison
  RegulatorGains gains;
  TorsoGains torso_gains;
  ModelParams model;

  void validate() const;  // throws std::invalid_argument on bad configs
};

// ---------------------------------------------------------------------------
// Results

struct TickRow {
  double t = 0.0;
  int k = 0;
  double tau = 0.0;
  double x = 0.0, y = 0.0, vx = 0.0, vy = 0.0;
  double phi = 0.0, phidot = 0.0;
  double tau_f = 0.0;
  DeltaY dy;
  double psi_x1 = 0.0, psi_x2 = 0.0, psi_y1 = 0.0, psi_y2 = 0.0,
         psi_phi = 0.0;
  double slope = 0.0;
  double fx = 0.0, fy = 0.0;
};

struct StepRow {
  int k = 0;
  double t_mid = 0.0;
  double vx_avg = 0.0;  // step-window average used by the regulators
  double vy_avg = 0.0;
  double vxd = 0.0, vyd = 0.0;
  double dx_land = 0.0, dy_land = 0.0;  // commanded landing
  bool fell = false;
};

/// Internal per-step sample used for metrics; not serialized.
struct MidSample {
  int k = 0;
  double t_mid = 0.0;
  double v_x = 0.0;         // step-window longitudinal average
  double v_y_stride = 0.0;  // stride-window lateral average (sway-free)
  double v_d_x = 0.0, v_d_y = 0.0;
};

struct Trace {
  std::vector<TickRow> ticks;
  std::vector<StepRow> steps;
  std::vector<MidSample> mids;
  std::vector<AdaptiveNetwork> final_nets;  // x, y, phi when adaptation ran
};

struct Metrics {
  std::optional<double> steady_state_err_x;  // [m/s]
  std::optional<double> steady_state_err_y;
  std::optional<double> convergence_time_x;  // [s]
  std::optional<double> convergence_time_y;
  std::string reason_sse_x, reason_sse_y;  // set when the metric is undefined
  std::string reason_conv_x, reason_conv_y;
  bool fell = false;
  double max_abs_phi = 0.0;  // [rad]
};

// ---------------------------------------------------------------------------
// Operations

/// Average velocity from two event positions separated by `window` seconds.
double mid_step_velocity(double p_prev, double p_cur, double window);

/// Deterministic closed-loop execution of one scenario.
std::pair<Trace, Metrics> run_scenario(const ScenarioConfig& cfg);

/// Steady-state error (mean |v - v_d| over the last 10 steps of each
/// constant-reference segment) and convergence time (first mid-step time
/// after which every later step of the segment is within 0.02 m/s).
/// The reported values are those of the final segment.
Metrics compute_metrics(const Trace& trace, const ScenarioConfig& cfg);

/// The fixed set of named experiments; `master_seed` derives one RNG stream
/// per scenario from the scenario name.
std::vector<ScenarioConfig> scenario_catalog(std::uint64_t master_seed = 0);

/// Stable seed derivation for named sub-streams (networks, terrain,
/// catalog entries).
std::uint64_t derive_seed(std::uint64_t master, const std::string& tag);

/// Velocity tolerance shared by the convergence metric and the acceptance
/// thresholds.
inline constexpr double kConvergenceBand = 0.02;  // [m/s]

}  // namespace gaitadapt
