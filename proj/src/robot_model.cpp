#include "weldfeas/robot_model.hpp"

#include <cmath>

namespace weldfeas {

namespace {

Pose translation(double x, double y, double z) {
  Pose p;
  p.position = Vec3(x, y, z);
  return p;
}

Pose rot_x_pose(double a) {
  Pose p;
  p.orientation = Rotation::rot_x(a);
  return p;
}

}  // namespace

void RobotModel::compile_stages() {
  if (convention == DHConvention::kStandard) {
    for (int j = 0; j < 6; ++j) {
      const DHRow& row = dh[j];
      stages[j].pre = Pose::identity();
      // Tz(d) * Tx(a) * Rx(alpha)
      Pose post = translation(row.a, 0.0, row.d);
      post.orientation = Rotation::rot_x(row.alpha);
      stages[j].post = post;
      stages[j].theta_offset = row.theta_offset;
    }
  } else {
    // Joint 1 has no preceding row; rows feed joints 2..6.
    stages[0].pre = Pose::identity();
    stages[0].post = Pose::identity();
    stages[0].theta_offset = dh[0].theta_offset;
    for (int j = 1; j < 6; ++j) {
      const DHRow& row = dh[j - 1];
      Pose pre = rot_x_pose(row.alpha);
      pre.position = Vec3(row.a, 0.0, 0.0);  // x is invariant under Rx
      stages[j].pre = pre;
      stages[j].post = translation(0.0, 0.0, row.d);
      stages[j].theta_offset = dh[j].theta_offset;
    }
  }
}

ChainState compute_chain(const RobotModel& model, const JointState& q) {
  ChainState cs;
  cs.frame[0] = Pose::identity();
  Pose t = Pose::identity();
  for (int j = 0; j < 6; ++j) {
    const LinkStage& st = model.stages[j];
    const Pose pre_frame = t * st.pre;
    cs.joint_axis[j] = pre_frame.orientation * Vec3::UnitZ();
    cs.joint_origin[j] = pre_frame.position;

    Pose rot;
    rot.orientation = Rotation::rot_z(q[j] + st.theta_offset);
    t = pre_frame * rot * st.post;
    cs.frame[j + 1] = t;

    if (model.convention == DHConvention::kStandard) {
      // Body hangs off the joint after the d-slide along the joint axis.
      cs.body_attach[j] = cs.joint_origin[j] + model.dh[j].d * cs.joint_axis[j];
    } else {
      cs.body_attach[j] = t.position;
    }
  }
  cs.tcp = t * model.tcp.transform;
  return cs;
}

Pose forward_kinematics(const RobotModel& model, const JointState& q) {
  return compute_chain(model, q).tcp;
}

Mat6 geometric_jacobian(const RobotModel& model, const JointState& q) {
  const ChainState cs = compute_chain(model, q);
  Mat6 jac;
  for (int j = 0; j < 6; ++j) {
    const Vec3 z = cs.joint_axis[j];
    const Vec3 lever = cs.tcp.position - cs.joint_origin[j];
    jac.block<3, 1>(0, j) = z.cross(lever);
    jac.block<3, 1>(3, j) = z;
  }
  return jac;
}

Vec3 wrist_center(const RobotModel& model, const JointState& q) {
  const ChainState cs = compute_chain(model, q);
  return model.morphology == Morphology::kPumaLike ? cs.frame[6].position
                                                   : cs.frame[5].position;
}

RobotModel builtin_puma_like() {
  RobotModel m;
  m.name = "puma_like";
  m.morphology = Morphology::kPumaLike;
  m.convention = DHConvention::kModifiedShifted;
  m.dh = {DHRow{0.11, 0.0, kPi / 2, 0.0},  //
          DHRow{0.0, 0.42, 0.0, 0.0},      //
          DHRow{0.38, 0.0, -kPi / 2, 0.0}, //
          DHRow{0.0, 0.0, kPi / 2, 0.0},   //
          DHRow{0.0, 0.0, -kPi / 2, 0.0},  //
          DHRow{0.0, 0.0, 0.0, 0.0}};
  Pose tool = Pose::identity();
  tool.position = Vec3(0.03, 0.0, 0.37);
  tool.orientation = Rotation::rot_y(kPi / 4);
  m.tcp.transform = tool;
  m.limits.speed_max = {kPi / 6, kPi / 6, kPi / 6, kPi / 3, kPi / 3, kPi / 3};
  m.limits.torque_max = {65.0, 65.0, 65.0, 20.0, 20.0, 20.0};
  m.masses.joints = {PointMass{1.040, Vec3(0.0, 0.08, 0.0)},    //
                     PointMass{3.210, Vec3(0.4, 0.0, 0.0)},     //
                     PointMass{1.040, Vec3(0.0, 0.05, 0.0)},    //
                     PointMass{0.860, Vec3(0.0, 0.1, -0.05)},   //
                     PointMass{0.740, Vec3(0.0, 0.0, 0.0)},     //
                     PointMass{2.000, Vec3(-0.03, 0.0, 0.11)}};
  m.l_arm = 0.793;
  m.compile_stages();
  return m;
}

RobotModel builtin_ur_like() {
  RobotModel m;
  m.name = "ur_like";
  m.morphology = Morphology::kUrLike;
  m.convention = DHConvention::kStandard;
  m.dh = {DHRow{0.117, 0.0, kPi / 2, 0.0},  //
          DHRow{0.0, 0.38, 0.0, 0.0},       //
          DHRow{0.0, 0.355, 0.0, 0.0},      //
          DHRow{-0.11, 0.0, kPi / 2, 0.0},  //
          DHRow{0.22, 0.0, -kPi / 2, 0.0},  //
          DHRow{0.19, 0.0, 0.0, 0.0}};
  Pose tool = Pose::identity();
  tool.position = Vec3(0.04, 0.0, 0.0);
  tool.orientation = Rotation::rot_y(kPi / 4);
  m.tcp.transform = tool;
  m.limits.speed_max = {kPi / 6, kPi / 6, kPi / 6, kPi / 3, kPi / 3, kPi / 3};
  m.limits.torque_max = {65.0, 65.0, 65.0, 20.0, 20.0, 20.0};
  m.masses.joints = {PointMass{1.040, Vec3(0.0, -0.08, 0.0)},   //
                     PointMass{3.190, Vec3(0.362, 0.0, 0.05)},  //
                     PointMass{0.890, Vec3(0.295, 0.0, 0.0)},   //
                     PointMass{0.740, Vec3(0.0, 0.0, 0.0)},     //
                     PointMass{0.740, Vec3(0.0, 0.0, 0.0)},     //
                     PointMass{2.000, Vec3(0.0, -0.03, 0.08)}};
  m.l_arm = 0.735;
  m.compile_stages();
  return m;
}

std::pair<RobotModel, RobotModel> builtin_models() {
  return {builtin_puma_like(), builtin_ur_like()};
}

}  // namespace weldfeas
