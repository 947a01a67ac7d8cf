#include "weldfeas/geom.hpp"

#include <cmath>
#include <stdexcept>

namespace weldfeas {

double wrap_angle(double a) {
  double w = std::fmod(a, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  if (w > kPi) w -= 2.0 * kPi;
  return w;
}

Rotation Rotation::from_quaternion(const Eigen::Quaterniond& q) {
  Eigen::Quaterniond n = q;
  n.normalize();
  return Rotation(n);
}

Rotation Rotation::from_matrix(const Mat3& m) {
  return from_quaternion(Eigen::Quaterniond(m));
}

Rotation Rotation::from_rpy(double roll, double pitch, double yaw) {
  Eigen::Quaterniond q = Eigen::AngleAxisd(yaw, Vec3::UnitZ()) *
                         Eigen::AngleAxisd(pitch, Vec3::UnitY()) *
                         Eigen::AngleAxisd(roll, Vec3::UnitX());
  return from_quaternion(q);
}

Rotation Rotation::from_axis_angle(const Vec3& axis, double angle) {
  const double n = axis.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw std::invalid_argument("from_axis_angle: zero or non-finite axis");
  }
  return from_quaternion(Eigen::Quaterniond(Eigen::AngleAxisd(angle, axis / n)));
}

Rotation Rotation::operator*(const Rotation& rhs) const {
  Eigen::Quaterniond q = q_ * rhs.q_;
  q.normalize();
  return Rotation(q);
}

double Rotation::angle_to(const Rotation& other) const {
  return q_.angularDistance(other.q_);
}

Vec3 Rotation::rpy() const {
  const Mat3 m = matrix();
  const double pitch = std::asin(std::clamp(-m(2, 0), -1.0, 1.0));
  const double roll = std::atan2(m(2, 1), m(2, 2));
  const double yaw = std::atan2(m(1, 0), m(0, 0));
  return Vec3(roll, pitch, yaw);
}

Rotation Rotation::slerp(const Rotation& to, double t) const {
  return from_quaternion(q_.slerp(t, to.q_));
}

Pose Pose::operator*(const Pose& rhs) const { return compose(*this, rhs); }

Pose Pose::inverse() const {
  Pose out;
  out.orientation = orientation.inverse();
  out.position = -(out.orientation * position);
  return out;
}

Pose pose_from_rpy(double x, double y, double z, double roll, double pitch, double yaw) {
  for (double v : {x, y, z, roll, pitch, yaw}) {
    if (!std::isfinite(v)) throw std::invalid_argument("pose_from_rpy: non-finite input");
  }
  Pose p;
  p.position = Vec3(x, y, z);
  p.orientation = Rotation::from_rpy(roll, pitch, yaw);
  return p;
}

Pose compose(const Pose& a, const Pose& b) {
  Pose out;
  out.orientation = a.orientation * b.orientation;
  out.position = a.orientation * b.position + a.position;
  return out;
}

PoseDistance pose_distance(const Pose& a, const Pose& b) {
  PoseDistance d;
  d.position = (a.position - b.position).norm();
  d.angle = a.orientation.angle_to(b.orientation);
  return d;
}

}  // namespace weldfeas
