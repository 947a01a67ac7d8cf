#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "weldfeas/robot_model.hpp"

namespace weldfeas {

struct Box {
  Pose pose;          // center frame
  Vec3 half_extents;  // m
};

struct Cylinder {
  Pose pose;      // axis along local z, centered on the origin
  double radius;  // m
  double length;  // m
};

struct HalfSpace {
  Vec3 normal;    // unit, points into the free region
  double offset;  // free region: normal . p >= offset
};

struct EnvPrimitive {
  std::string name;
  std::variant<Box, Cylinder, HalfSpace> shape;
};

/// Capsule in a body-local frame; a == b degenerates to a sphere.
struct LinkCapsule {
  Vec3 a = Vec3::Zero();
  Vec3 b = Vec3::Zero();
  double radius = 0.0;
};

/// Capsule approximations of the robot plus an environment of primitives.
/// links[j] lives in DH frame j+1; tool capsules live in frame 6.
struct CollisionGeometry {
  std::array<LinkCapsule, 6> links{};
  std::vector<LinkCapsule> tool;
  std::vector<EnvPrimitive> environment;

  // Radius of the sphere around the instantaneous weld point inside which
  // tool-vs-workpiece contacts are exempt (the wire tip must approach the
  // seam to stick-out distance by design).
  double weld_exclusion_radius = 0.02;
};

/// Capsules derived from the model's kinematic segments with the default
/// radius table (0.05 m links 1-3, 0.04 m wrist links, 0.02 m torch neck).
/// radius_scale tunes all radii together for the documented recovery
/// procedure.
CollisionGeometry default_collision_geometry(const RobotModel& model,
                                             double radius_scale = 1.0);

struct CollisionVerdict {
  bool colliding = false;
  double min_clearance = std::numeric_limits<double>::infinity();
  std::pair<std::string, std::string> witness;  // body ids of the closest pair
};

struct CheckContext {
  Pose base;                      // robot base pose in the world frame
  double margin = 0.01;           // m
  std::optional<Vec3> weld_point; // world; enables the tool exemption sphere
};

/// Minimum signed clearance over all link-vs-environment pairs and the
/// self-collision pair set (|i-j| >= 2 plus tool vs links 1-3); colliding iff
/// min_clearance < margin.
CollisionVerdict check_state(const CollisionGeometry& geom, const RobotModel& model,
                             const JointState& q, const CheckContext& ctx);

struct SweepHit {
  int index = 0;  // first colliding sample index
  CollisionVerdict verdict;
};

/// First collision along a joint path, or nullopt if clear. Consecutive
/// samples differing by more than 0.05 rad in any joint are densified before
/// checking; interpolated hits are attributed to the later sample index.
/// weld_points, when given, must parallel the path.
std::optional<SweepHit> sweep_check(const CollisionGeometry& geom, const RobotModel& model,
                                    const std::vector<JointState>& path,
                                    const CheckContext& ctx,
                                    const std::vector<Vec3>* weld_points = nullptr);

// Primitive distances, exposed for tests and the scene validator.
double segment_segment_distance(const Vec3& p1, const Vec3& q1, const Vec3& p2,
                                const Vec3& q2);
double point_box_distance(const Vec3& p, const Box& box);            // signed
double point_cylinder_distance(const Vec3& p, const Cylinder& cyl);  // signed
double point_halfspace_distance(const Vec3& p, const HalfSpace& hs); // signed
double segment_primitive_distance(const Vec3& a, const Vec3& b,
                                  const std::variant<Box, Cylinder, HalfSpace>& shape);

}  // namespace weldfeas
