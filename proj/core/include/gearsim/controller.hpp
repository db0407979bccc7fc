#pragma once

#include "gearsim/aircraft.hpp"

#include <array>
#include <optional>

namespace gearsim {

struct PidGains {
  double kp = 0.0;
  double ki = 0.0;  // [1/s]
  double kd = 0.0;  // [s]

  bool operator==(const PidGains&) const = default;
};

/// Servo-valve / accumulator parameters of the hydraulic force chain.
/// The flow gain constants ka, kb carry no published values; the defaults
/// here are placeholders and results produced with them are not comparable
/// to the passive or direct-PID configurations.
struct HydraulicParams {
  double ka = 1e4;          // force per unit flow [N/(m^3/s)]
  double kb = 1e2;          // force per flow-rate * |flow|
  double cd = 0.6;          // discharge coefficient, (0, 1]
  double w = 0.01;          // servo-valve area gradient [m]
  double rho = 870.0;       // fluid density [kg/m^3]
  double p_high = 1.6e7;    // accumulator pressure [Pa]
  double p_low = 1e5;       // reservoir pressure [Pa]

  bool operator==(const HydraulicParams&) const = default;
};

void validate(const HydraulicParams& hyd);

enum class ForceMode {
  DirectPid,        // strut force is the PID output
  HydraulicChain,   // PID output drives a servo valve; flow maps to force
};

/// Per-gear-group controller configuration. The left and right main gears
/// share main_gains; the regulation target is a constant relative-velocity
/// reference (zero for shock absorption).
struct ControlConfig {
  PidGains nose_gains;
  PidGains main_gains;
  std::optional<HydraulicParams> hydraulic;
  ForceMode force_mode = ForceMode::DirectPid;
  double reference = 0.0;

  bool operator==(const ControlConfig&) const = default;
};

void validate(const ControlConfig& config);

/// Discrete-PID memory for one channel: trapezoidal integral plus the
/// previous error for the backward-difference derivative.
struct PidChannel {
  double integral = 0.0;
  double prev_error = 0.0;
};

/// Controller memory, zeroed at simulation start and advanced once per step.
struct ControllerState {
  std::array<PidChannel, 3> channels{};
  std::array<double, 3> prev_flow{};  // previous servo-valve flow per gear
  double prev_time = 0.0;
};

/// Error signals (nose, left, right): reference minus strut relative velocity.
std::array<double, 3> error_signals(const State& state, const AircraftParams& params,
                                    double reference = 0.0);

/// One discrete PID update: kp*e + ki*I + kd*D with trapezoidal I and
/// backward-difference D. Mutates the channel memory.
double pid_force(const PidGains& gains, double error, PidChannel& channel, double dt);

/// Servo-valve flow for the given valve displacement, then force per the
/// flow/force law. prev_flow is updated to the new flow.
double hydraulic_force(const HydraulicParams& hyd, double valve_displacement,
                       double& prev_flow, double dt);

/// Control forces for all three struts at one step.
ControlForces active_forces(const ControlConfig& config, const AircraftParams& params,
                            const State& state, ControllerState& ctl, double dt);

/// Classical Ziegler-Nichols baseline gains for this airframe.
ControlConfig ziegler_nichols_gains();

}  // namespace gearsim
