#pragma once

#include <Eigen/Dense>

#include <optional>

namespace gearsim {

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Generalized coordinate indices: body bounce, pitch, roll, then the
/// three gear masses (nose, rear-left, rear-right).
inline constexpr int kBounce = 0;
inline constexpr int kPitch = 1;
inline constexpr int kRoll = 2;
inline constexpr int kNoseGear = 3;
inline constexpr int kLeftGear = 4;
inline constexpr int kRightGear = 5;

/// Rigid-body and landing-gear parameters of the 6-DOF touchdown model.
///
/// Sign convention: vertical displacements are positive downward, so a
/// descending aircraft carries positive vertical velocity into touchdown.
struct AircraftParams {
  double sprung_mass = 64500.0;       // M [kg]
  double pitch_inertia = 3781268.0;   // I_xx [kg m^2]
  double roll_inertia = 1278370.0;    // I_yy [kg m^2]

  double gear_mass[3] = {300.0, 300.0, 300.0};               // m1..m3 [kg]
  double suspension_stiffness[3] = {15e5, 15e5, 15e5};       // ks1..ks3 [N/m]
  double suspension_damping[3] = {1e5, 1e5, 1e5};            // cs1..cs3 [N s/m]
  double tyre_stiffness[3] = {3e6, 3e6, 3e6};                // kt1..kt3 [N/m]

  // Attachment geometry: nose gear sits `a` ahead of the CG, main gears
  // `b` behind it; `d` and `e` are the lateral offsets of the left and
  // right main gears. The nose gear roll lever arm is (d - e).
  double a = 10.88;   // [m]
  double b = 1.76;    // [m]
  double d = 3.795;   // [m]
  double e = 3.795;   // [m]

  bool operator==(const AircraftParams&) const = default;
};

/// Throws std::invalid_argument naming the offending field if any mass,
/// inertia, stiffness, or geometry length is non-positive, any damping
/// rate is negative, or any field is non-finite.
void validate(const AircraftParams& params);

/// Dynamic state: six generalized coordinates and their velocities.
/// coords = (z, theta, phi, z1, z2, z3); displacements in metres,
/// angles in radians.
struct State {
  Vec6 coords = Vec6::Zero();
  Vec6 velocity = Vec6::Zero();

  double z() const { return coords[kBounce]; }
  double pitch() const { return coords[kPitch]; }
  double roll() const { return coords[kRoll]; }
  double gear(int i) const { return coords[kNoseGear + i]; }

  bool finite() const { return coords.allFinite() && velocity.allFinite(); }
  bool operator==(const State&) const = default;
};

/// Relative motion of each strut (body attachment point minus gear mass),
/// ordered nose, rear-left, rear-right. Accelerations are only available
/// when generalized accelerations were supplied.
struct RelativeKinematics {
  Vec3 displacement = Vec3::Zero();
  Vec3 velocity = Vec3::Zero();
  std::optional<Vec3> acceleration;
};

/// Constant coefficient matrices of m*qddot + c*qdot + k*q = f.
struct SystemMatrices {
  Mat6 mass = Mat6::Zero();
  Mat6 damping = Mat6::Zero();
  Mat6 stiffness = Mat6::Zero();
};

/// Active control forces applied at the three struts [N].
struct ControlForces {
  double nose = 0.0;
  double left = 0.0;
  double right = 0.0;

  double operator[](int i) const { return i == 0 ? nose : (i == 1 ? left : right); }
  bool finite() const;
  bool operator==(const ControlForces&) const = default;
};

/// Builds the 6x6 mass, damping, and stiffness matrices. The mass matrix
/// is diagonal; damping and stiffness are symmetric, each the sum of
/// rank-one strut contributions plus (for stiffness) the tyre springs.
SystemMatrices assemble_matrices(const AircraftParams& params);

/// Relative displacement and velocity per strut; pass the generalized
/// accelerations to also get relative accelerations.
RelativeKinematics relative_kinematics(const State& state, const AircraftParams& params);
RelativeKinematics relative_kinematics(const State& state, const Vec6& accel,
                                       const AircraftParams& params);

/// Generalized force vector produced by the strut control forces.
Vec6 force_vector(const ControlForces& forces, const AircraftParams& params);

/// Time derivative of the state under the given control forces.
struct StateDerivative {
  Vec6 velocity;
  Vec6 acceleration;
};
StateDerivative state_derivative(const State& state, const ControlForces& forces,
                                 const SystemMatrices& matrices,
                                 const AircraftParams& params);

}  // namespace gearsim
