#pragma once

#include <array>
#include <string>
#include <utility>

#include "weldfeas/geom.hpp"

namespace weldfeas {

using JointVector = Eigen::Matrix<double, 6, 1>;
using JointState = JointVector;  // joint angles [rad]
using Mat6 = Eigen::Matrix<double, 6, 6>;

enum class Morphology { kPumaLike, kUrLike };

/// One row of the kinematic parameter table, stored exactly as published
/// (row i of the table maps to dh[i-1]; the all-dash rows carry zeros).
struct DHRow {
  double d = 0.0;            // m
  double a = 0.0;            // m
  double alpha = 0.0;        // rad
  double theta_offset = 0.0; // rad, added to the joint variable
};

/// Fixed transform from the last joint frame to the TCP (contact-tube tip).
/// The lateral offset runs along the joint-6 x axis, then the 45 deg tool
/// bend is applied about y; stick-out is a planning parameter, not part of
/// this mount.
struct TcpMount {
  Pose transform;
};

struct JointLimits {
  std::array<double, 6> speed_max{};   // rad/s
  std::array<double, 6> torque_max{};  // N*m
};

/// Lumped mass rigidly attached to the body driven by one joint; com is
/// expressed in that joint's frame (orientation of the DH frame, origin at
/// the joint's physical attachment point).
struct PointMass {
  double mass_kg = 0.0;
  Vec3 com = Vec3::Zero();
};

struct MassModel {
  std::array<PointMass, 6> joints{};
};

/*
 * Link transform conventions.
 *
 * The two morphologies use the frame conventions of their respective
 * reference treatments, which read the same (d, a, alpha) table differently:
 *
 *  UR-like  (standard / distal DH, rows aligned with joints):
 *      A_j = Rz(q_j) * Tz(d_j) * Tx(a_j) * Rx(alpha_j)
 *
 *  PUMA-like (modified / proximal DH; joint j takes its twist, offset and
 *  slide from the previous table row, so row usage is shifted by one):
 *      A_1 = Rz(q_1)
 *      A_j = Rx(alpha_{j-1}) * Tx(a_{j-1}) * Rz(q_j) * Tz(d_{j-1}),  j >= 2
 *
 * Only the shifted reading yields the classic anthropomorphic chain (0.42 m
 * upper arm, 0.38 m forearm along the joint-4 axis, spherical wrist); the
 * aligned standard reading degenerates (the wrist center lands on the
 * joint-3 axis).
 */
enum class DHConvention { kStandard, kModifiedShifted };

/// Compiled per-joint stage: A_j = pre * Rz(q_j + theta_offset) * post.
struct LinkStage {
  Pose pre;
  Pose post;
  double theta_offset = 0.0;
};

struct RobotModel {
  std::string name;
  Morphology morphology = Morphology::kUrLike;
  DHConvention convention = DHConvention::kStandard;
  std::array<DHRow, 6> dh{};
  TcpMount tcp;
  JointLimits limits;
  MassModel masses;
  double l_arm = 0.0;  // m, criterion normalization length

  std::array<LinkStage, 6> stages{};  // filled by compile_stages()

  void compile_stages();
};

/// World-side quantities of the whole chain at a configuration, with the
/// per-joint data the Jacobian, statics and collision layers need.
struct ChainState {
  std::array<Pose, 7> frame;          // frame[0] = base, frame[j] = after A_j
  Pose tcp;                           // frame[6] * tcp mount
  std::array<Vec3, 6> joint_origin;   // point on joint axis (pre-rotation frame)
  std::array<Vec3, 6> joint_axis;     // unit rotation axis, base frame
  std::array<Vec3, 6> body_attach;    // mass attachment origin of link j
};

ChainState compute_chain(const RobotModel& model, const JointState& q);

/// TCP pose in the robot base frame.
Pose forward_kinematics(const RobotModel& model, const JointState& q);

/// 6x6 geometric Jacobian at the TCP, base frame; rows 0-2 linear, 3-5 angular.
Mat6 geometric_jacobian(const RobotModel& model, const JointState& q);

/// Wrist-reference point used by the analytic IK (PUMA: spherical wrist
/// center = frame-6 origin; UR: frame-5 origin).
Vec3 wrist_center(const RobotModel& model, const JointState& q);

/// Fully populated models of the two studied morphologies. Order: (PUMA-like,
/// UR-like).
std::pair<RobotModel, RobotModel> builtin_models();

RobotModel builtin_puma_like();
RobotModel builtin_ur_like();

}  // namespace weldfeas
