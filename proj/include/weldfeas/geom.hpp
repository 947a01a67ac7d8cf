#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

namespace weldfeas {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

// Wrap an angle to (-pi, pi].
double wrap_angle(double a);

/// Unit-quaternion backed rotation. Composition renormalizes, so long chains
/// of composes keep R*R^T = I at machine precision.
class Rotation {
 public:
  Rotation() : q_(Eigen::Quaterniond::Identity()) {}

  static Rotation identity() { return Rotation(); }
  static Rotation from_quaternion(const Eigen::Quaterniond& q);
  static Rotation from_matrix(const Mat3& m);
  // Fixed-axis XYZ convention: R = Rz(yaw) * Ry(pitch) * Rx(roll).
  static Rotation from_rpy(double roll, double pitch, double yaw);
  static Rotation from_axis_angle(const Vec3& axis, double angle);
  static Rotation rot_x(double a) { return from_axis_angle(Vec3::UnitX(), a); }
  static Rotation rot_y(double a) { return from_axis_angle(Vec3::UnitY(), a); }
  static Rotation rot_z(double a) { return from_axis_angle(Vec3::UnitZ(), a); }

  Rotation operator*(const Rotation& rhs) const;
  Vec3 operator*(const Vec3& v) const { return q_ * v; }
  Rotation inverse() const { return Rotation(q_.conjugate()); }

  Mat3 matrix() const { return q_.toRotationMatrix(); }
  const Eigen::Quaterniond& quaternion() const { return q_; }

  // Angle of the relative rotation, in [0, pi].
  double angle_to(const Rotation& other) const;

  // Inverse of from_rpy away from pitch = +-pi/2: returns (roll, pitch, yaw).
  Vec3 rpy() const;

  Rotation slerp(const Rotation& to, double t) const;

 private:
  explicit Rotation(const Eigen::Quaterniond& q) : q_(q) {}
  Eigen::Quaterniond q_;
};

/// Rigid transform: applies orientation then adds position.
struct Pose {
  Vec3 position{Vec3::Zero()};
  Rotation orientation;

  static Pose identity() { return Pose{}; }

  Vec3 operator*(const Vec3& p) const { return orientation * p + position; }
  Pose operator*(const Pose& rhs) const;
  Pose inverse() const;
};

// Throws std::invalid_argument on non-finite input.
Pose pose_from_rpy(double x, double y, double z, double roll, double pitch, double yaw);

// result = a then b applied in a's frame (i.e. applies b first).
Pose compose(const Pose& a, const Pose& b);

struct PoseDistance {
  double position;  // m
  double angle;     // rad, in [0, pi]
};
PoseDistance pose_distance(const Pose& a, const Pose& b);

}  // namespace weldfeas
