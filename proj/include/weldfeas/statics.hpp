#pragma once

#include "weldfeas/robot_model.hpp"

namespace weldfeas {

using TorqueVector = Eigen::Matrix<double, 6, 1>;  // N*m

/// Static gravity torque about each joint axis (backward Newton-Euler over
/// the lumped masses):
///   tau_i = z_i . sum_{k>=i} (p_com,k - p_i) x (m_k * g)
/// Everything is expressed in the robot base frame; for tilted base mounts
/// the caller rotates the world gravity vector into the base frame (gravity
/// itself stays world -z).
TorqueVector static_torques(const RobotModel& model, const JointState& q,
                            const Vec3& g = Vec3(0.0, 0.0, -9.81));

/// Gravitational potential matching static_torques' sign convention
/// (tau = dU/dq): U = sum_k m_k * (g . p_com,k).
double gravity_potential(const RobotModel& model, const JointState& q,
                         const Vec3& g = Vec3(0.0, 0.0, -9.81));

}  // namespace weldfeas
