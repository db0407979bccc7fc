#include "gearsim/controller.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gearsim {

void validate(const HydraulicParams& hyd) {
  if (!(hyd.p_high > hyd.p_low && hyd.p_low > 0.0)) {
    throw std::invalid_argument("hydraulic pressures must satisfy p_high > p_low > 0");
  }
  if (!(hyd.rho > 0.0)) {
    throw std::invalid_argument("hydraulic fluid density must be > 0");
  }
  if (!(hyd.cd > 0.0 && hyd.cd <= 1.0)) {
    throw std::invalid_argument("discharge coefficient must be in (0, 1]");
  }
  if (!(hyd.w > 0.0)) {
    throw std::invalid_argument("valve area gradient must be > 0");
  }
}

void validate(const ControlConfig& config) {
  auto check_gains = [](const PidGains& g, const char* which) {
    if (!(std::isfinite(g.kp) && std::isfinite(g.ki) && std::isfinite(g.kd)) ||
        g.kp < 0.0 || g.ki < 0.0 || g.kd < 0.0) {
      throw std::invalid_argument(std::string(which) + " gains must be finite and >= 0");
    }
  };
  check_gains(config.nose_gains, "nose");
  check_gains(config.main_gains, "main");
  if (config.force_mode == ForceMode::HydraulicChain) {
    if (!config.hydraulic) {
      throw std::invalid_argument("hydraulic parameters required in hydraulic-chain mode");
    }
    validate(*config.hydraulic);
  }
}

std::array<double, 3> error_signals(const State& state, const AircraftParams& params,
                                    double reference) {
  const RelativeKinematics rk = relative_kinematics(state, params);
  return {reference - rk.velocity[0], reference - rk.velocity[1],
          reference - rk.velocity[2]};
}

double pid_force(const PidGains& gains, double error, PidChannel& channel, double dt) {
  channel.integral += 0.5 * dt * (error + channel.prev_error);
  const double derivative = (error - channel.prev_error) / dt;
  channel.prev_error = error;
  return gains.kp * error + gains.ki * channel.integral + gains.kd * derivative;
}

double hydraulic_force(const HydraulicParams& hyd, double valve_displacement,
                       double& prev_flow, double dt) {
  if (!(hyd.p_high > hyd.p_low)) {
    throw std::invalid_argument("hydraulic pressures must satisfy p_high > p_low");
  }
  const double flow =
      hyd.cd * hyd.w * valve_displacement * std::sqrt((hyd.p_high - hyd.p_low) / hyd.rho);
  const double flow_rate = (flow - prev_flow) / dt;
  prev_flow = flow;
  return hyd.ka * flow + hyd.kb * flow_rate * std::abs(flow);
}

ControlForces active_forces(const ControlConfig& config, const AircraftParams& params,
                            const State& state, ControllerState& ctl, double dt) {
  if (!(dt > 0.0)) {
    throw std::invalid_argument("dt must be > 0");
  }
  const std::array<double, 3> errors = error_signals(state, params, config.reference);

  double out[3];
  for (int i = 0; i < 3; ++i) {
    const PidGains& gains = (i == 0) ? config.nose_gains : config.main_gains;
    out[i] = pid_force(gains, errors[i], ctl.channels[i], dt);
  }

  if (config.force_mode == ForceMode::HydraulicChain) {
    const HydraulicParams& hyd = *config.hydraulic;
    for (int i = 0; i < 3; ++i) {
      out[i] = hydraulic_force(hyd, out[i], ctl.prev_flow[i], dt);
    }
  }

  ctl.prev_time += dt;
  return ControlForces{out[0], out[1], out[2]};
}

ControlConfig ziegler_nichols_gains() {
  ControlConfig config;
  config.nose_gains = {0.2, 2.5, 0.0076};
  config.main_gains = {0.5, 275.0, 0.0003};
  config.force_mode = ForceMode::DirectPid;
  return config;
}

}  // namespace gearsim
