#pragma once

#include <string>
#include <vector>

#include "weldfeas/robot_model.hpp"

namespace weldfeas {

/// One closed-form IK branch. The branch triple is (shoulder, elbow, wrist),
/// each 0/1, and orders the solution set lexicographically so posture indices
/// are stable across runs.
struct IkSolution {
  JointState q = JointState::Zero();
  std::array<int, 3> branch{0, 0, 0};
  bool degenerate = false;  // produced at a branch coalescence

  std::string label() const;
};

struct IkSolutionSet {
  std::vector<IkSolution> solutions;

  bool empty() const { return solutions.empty(); }
  std::size_t size() const { return solutions.size(); }
};

/// All real solutions for the TCP target pose given in the robot base frame.
/// Angles are reported in (-pi, pi]. Empty set <=> unreachable. Throws
/// std::invalid_argument if the model does not match one of the two supported
/// closed-form structures.
IkSolutionSet solve_ik(const RobotModel& model, const Pose& target);

/// Member minimizing the max-norm wrapped joint distance to the reference.
/// Throws NoSolutionError on an empty set.
JointState nearest_solution(const IkSolutionSet& set, const JointState& reference);

/// Wrapped per-joint distance used by nearest_solution (max over joints).
double joint_distance_maxnorm(const JointState& a, const JointState& b);

}  // namespace weldfeas
