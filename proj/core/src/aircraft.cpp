#include "gearsim/aircraft.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gearsim {

namespace {

void require_positive(double value, const char* name) {
  if (!(std::isfinite(value) && value > 0.0)) {
    throw std::invalid_argument(std::string(name) + " must be finite and > 0");
  }
}

void require_non_negative(double value, const char* name) {
  if (!(std::isfinite(value) && value >= 0.0)) {
    throw std::invalid_argument(std::string(name) + " must be finite and >= 0");
  }
}

}  // namespace

void validate(const AircraftParams& p) {
  require_positive(p.sprung_mass, "sprung_mass");
  require_positive(p.pitch_inertia, "pitch_inertia");
  require_positive(p.roll_inertia, "roll_inertia");
  static const char* gear_mass_names[] = {"gear_mass[0]", "gear_mass[1]", "gear_mass[2]"};
  static const char* ks_names[] = {"suspension_stiffness[0]", "suspension_stiffness[1]",
                                   "suspension_stiffness[2]"};
  static const char* cs_names[] = {"suspension_damping[0]", "suspension_damping[1]",
                                   "suspension_damping[2]"};
  static const char* kt_names[] = {"tyre_stiffness[0]", "tyre_stiffness[1]",
                                   "tyre_stiffness[2]"};
  for (int i = 0; i < 3; ++i) {
    require_positive(p.gear_mass[i], gear_mass_names[i]);
    require_positive(p.suspension_stiffness[i], ks_names[i]);
    require_non_negative(p.suspension_damping[i], cs_names[i]);
    require_positive(p.tyre_stiffness[i], kt_names[i]);
  }
  require_positive(p.a, "a");
  require_positive(p.b, "b");
  require_positive(p.d, "d");
  require_positive(p.e, "e");
}

SystemMatrices assemble_matrices(const AircraftParams& p) {
  validate(p);

  const double cs1 = p.suspension_damping[0];
  const double cs2 = p.suspension_damping[1];
  const double cs3 = p.suspension_damping[2];
  const double ks1 = p.suspension_stiffness[0];
  const double ks2 = p.suspension_stiffness[1];
  const double ks3 = p.suspension_stiffness[2];
  const double kt1 = p.tyre_stiffness[0];
  const double kt2 = p.tyre_stiffness[1];
  const double kt3 = p.tyre_stiffness[2];
  const double a = p.a, b = p.b, d = p.d, e = p.e;

  SystemMatrices m;

  m.mass.diagonal() << p.sprung_mass, p.pitch_inertia, p.roll_inertia,
      p.gear_mass[0], p.gear_mass[1], p.gear_mass[2];

  const double l1 = cs1 + cs2 + cs3;
  const double l2 = -a * cs1 + b * cs2 + b * cs3;
  const double l3 = -(d - e) * cs1 - d * cs2 + e * cs3;
  const double l4 = a * a * cs1 + b * b * cs2 + b * b * cs3;
  const double l5 = (d - e) * a * cs1 - d * b * cs2 + e * b * cs3;
  const double l6 = (d - e) * (d - e) * cs1 + d * d * cs2 + e * e * cs3;

  m.damping << l1, l2, l3, -cs1, -cs2, -cs3,
               l2, l4, l5, a * cs1, -b * cs2, -b * cs3,
               l3, l5, l6, (d - e) * cs1, d * cs2, -e * cs3,
               -cs1, a * cs1, (d - e) * cs1, cs1, 0.0, 0.0,
               -cs2, -b * cs2, d * cs2, 0.0, cs2, 0.0,
               -cs3, -b * cs3, -e * cs3, 0.0, 0.0, cs3;

  const double u1 = ks1 + ks2 + ks3;
  const double u2 = -a * ks1 + b * ks2 + b * ks3;
  const double u3 = -(d - e) * ks1 - d * ks2 + e * ks3;
  const double u4 = a * a * ks1 + b * b * ks2 + b * b * ks3;
  const double u5 = (d - e) * a * ks1 - d * b * ks2 + e * b * ks3;
  const double u6 = (d - e) * (d - e) * ks1 + d * d * ks2 + e * e * ks3;

  m.stiffness << u1, u2, u3, -ks1, -ks2, -ks3,
                 u2, u4, u5, a * ks1, -b * ks2, -b * ks3,
                 u3, u5, u6, (d - e) * ks1, d * ks2, -e * ks3,
                 -ks1, a * ks1, (d - e) * ks1, ks1 + kt1, 0.0, 0.0,
                 -ks2, -b * ks2, d * ks2, 0.0, ks2 + kt2, 0.0,
                 -ks3, -b * ks3, -e * ks3, 0.0, 0.0, ks3 + kt3;

  return m;
}

namespace {

// Strut attachment rows: relative motion = row * generalized coordinates.
// Row i is (1, lever_pitch_i, lever_roll_i, ..., -1 at the gear slot).
void strut_rows(const AircraftParams& p, double rows[3][4]) {
  rows[0][0] = 1.0; rows[0][1] = -p.a;  rows[0][2] = -(p.d - p.e); rows[0][3] = -1.0;
  rows[1][0] = 1.0; rows[1][1] = p.b;   rows[1][2] = -p.d;         rows[1][3] = -1.0;
  rows[2][0] = 1.0; rows[2][1] = p.b;   rows[2][2] = p.e;          rows[2][3] = -1.0;
}

Vec3 apply_strut_rows(const Vec6& v, const AircraftParams& p) {
  double rows[3][4];
  strut_rows(p, rows);
  Vec3 out;
  for (int i = 0; i < 3; ++i) {
    out[i] = rows[i][0] * v[kBounce] + rows[i][1] * v[kPitch] +
             rows[i][2] * v[kRoll] + rows[i][3] * v[kNoseGear + i];
  }
  return out;
}

}  // namespace

RelativeKinematics relative_kinematics(const State& state, const AircraftParams& p) {
  RelativeKinematics rk;
  rk.displacement = apply_strut_rows(state.coords, p);
  rk.velocity = apply_strut_rows(state.velocity, p);
  return rk;
}

RelativeKinematics relative_kinematics(const State& state, const Vec6& accel,
                                       const AircraftParams& p) {
  RelativeKinematics rk = relative_kinematics(state, p);
  rk.acceleration = apply_strut_rows(accel, p);
  return rk;
}

bool ControlForces::finite() const {
  return std::isfinite(nose) && std::isfinite(left) && std::isfinite(right);
}

Vec6 force_vector(const ControlForces& forces, const AircraftParams& p) {
  const double f1 = forces.nose, f2 = forces.left, f3 = forces.right;
  Vec6 f;
  f << -f1 - f2 - f3,
       f1 * p.a - f2 * p.b - f3 * p.b,
       f1 * (p.d - p.e) + f2 * p.d - f3 * p.e,
       f1,
       f2,
       f3;
  return f;
}

StateDerivative state_derivative(const State& state, const ControlForces& forces,
                                 const SystemMatrices& m, const AircraftParams& p) {
  // The mass matrix is diagonal, so the inverse is an elementwise divide.
  for (int i = 0; i < 6; ++i) {
    if (m.mass(i, i) == 0.0) {
      throw std::invalid_argument("mass matrix has a zero diagonal entry");
    }
  }
  StateDerivative d;
  d.velocity = state.velocity;
  const Vec6 rhs =
      force_vector(forces, p) - m.damping * state.velocity - m.stiffness * state.coords;
  d.acceleration = rhs.cwiseQuotient(m.mass.diagonal());
  return d;
}

}  // namespace gearsim
