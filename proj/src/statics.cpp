#include "weldfeas/statics.hpp"

namespace weldfeas {

TorqueVector static_torques(const RobotModel& model, const JointState& q, const Vec3& g) {
  const ChainState cs = compute_chain(model, q);
  Vec3 com_world[6];
  for (int k = 0; k < 6; ++k) {
    const PointMass& pm = model.masses.joints[k];
    com_world[k] = cs.body_attach[k] + cs.frame[k + 1].orientation * pm.com;
  }
  TorqueVector tau = TorqueVector::Zero();
  for (int i = 0; i < 6; ++i) {
    Vec3 moment = Vec3::Zero();
    for (int k = i; k < 6; ++k) {
      const Vec3 lever = com_world[k] - cs.joint_origin[i];
      moment += lever.cross(model.masses.joints[k].mass_kg * g);
    }
    tau[i] = cs.joint_axis[i].dot(moment);
  }
  return tau;
}

double gravity_potential(const RobotModel& model, const JointState& q, const Vec3& g) {
  const ChainState cs = compute_chain(model, q);
  double u = 0.0;
  for (int k = 0; k < 6; ++k) {
    const PointMass& pm = model.masses.joints[k];
    const Vec3 com = cs.body_attach[k] + cs.frame[k + 1].orientation * pm.com;
    u += pm.mass_kg * g.dot(com);
  }
  return u;
}

}  // namespace weldfeas
