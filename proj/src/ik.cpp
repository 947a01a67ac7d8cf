#include "weldfeas/ik.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "weldfeas/errors.hpp"

namespace weldfeas {

namespace {

// Two branches coalesce when the trigonometric discriminant is this close to
// its boundary; the duplicate is dropped and the survivor flagged.
constexpr double kCoalesceTol = 1e-10;

struct Zyz {
  double phi, theta, psi;
  bool degenerate;
};

// Decompose E = Rz(phi) * Ry(theta) * Rz(psi). Returns one entry per theta
// sign branch (a single degenerate entry when sin(theta) ~ 0).
std::vector<Zyz> euler_zyz(const Mat3& e) {
  std::vector<Zyz> out;
  const double s_theta = std::hypot(e(0, 2), e(1, 2));
  if (s_theta * s_theta > kCoalesceTol) {
    const double theta = std::atan2(s_theta, e(2, 2));
    const double phi = std::atan2(e(1, 2), e(0, 2));
    const double psi = std::atan2(e(2, 1), -e(2, 0));
    out.push_back({phi, theta, psi, false});
    out.push_back({wrap_angle(phi + kPi), -theta, wrap_angle(psi + kPi), false});
  } else if (e(2, 2) > 0.0) {
    // theta = 0: only phi + psi is determined.
    out.push_back({std::atan2(e(1, 0), e(0, 0)), 0.0, 0.0, true});
  } else {
    // theta = pi: only phi - psi is determined.
    out.push_back({std::atan2(-e(1, 0), -e(0, 0)), kPi, 0.0, true});
  }
  return out;
}

void push_solution(std::vector<IkSolution>& sols, const JointState& q,
                   std::array<int, 3> branch, bool degenerate) {
  IkSolution s;
  for (int i = 0; i < 6; ++i) s.q[i] = wrap_angle(q[i]);
  s.branch = branch;
  s.degenerate = degenerate;
  for (const IkSolution& other : sols) {
    bool same = true;
    for (int i = 0; i < 6; ++i) {
      if (std::abs(wrap_angle(s.q[i] - other.q[i])) > 1e-9) {
        same = false;
        break;
      }
    }
    if (same) return;  // numerically identical twin
  }
  sols.push_back(s);
}

/*
 * UR-like closed form (standard DH, alpha = [pi/2, 0, 0, pi/2, -pi/2, 0]).
 *
 * With o5 = p - d6 * R * ez, the frame-1 z axis is (s1, -c1, 0) and the
 * offset of o5 along it is constant:  s1*o5.x - c1*o5.y = d4, giving two
 * shoulder branches. The rotation R16 factors as Rz(q2+q3+q4) * Ry(-q5) *
 * Rz(q6), a ZYZ problem with two wrist branches. Positions of o5 in frame 1
 * then reduce to a planar 2R problem with two elbow branches.
 */
std::vector<IkSolution> solve_ur(const RobotModel& model, const Pose& t06) {
  const double d1 = model.dh[0].d;
  const double a2 = model.dh[1].a;
  const double a3 = model.dh[2].a;
  const double d4 = model.dh[3].d;
  const double d5 = model.dh[4].d;
  const double d6 = model.dh[5].d;

  std::vector<IkSolution> sols;
  const Mat3 r06 = t06.orientation.matrix();
  const Vec3 p5 = t06.position - d6 * r06.col(2);

  const double rho = std::hypot(p5.x(), p5.y());
  const double k = rho > 0.0 ? d4 / rho : 2.0;
  if (std::abs(k) > 1.0 + kCoalesceTol) return sols;
  const bool shoulder_degenerate = std::abs(1.0 - k * k) < kCoalesceTol;
  const double psi = std::atan2(p5.y(), p5.x());
  const double beta = std::asin(std::clamp(k, -1.0, 1.0));
  const double q1_candidates[2] = {psi + beta, psi + kPi - beta};

  for (int sh = 0; sh < 2; ++sh) {
    const double q1 = q1_candidates[sh];
    const Rotation r01 = Rotation::rot_z(q1) * Rotation::rot_x(kPi / 2);
    const Mat3 e = (r01.inverse() * t06.orientation).matrix();
    const Vec3 v15 = r01.inverse() * (p5 - Vec3(0, 0, d1));

    for (const Zyz& w : euler_zyz(e)) {
      const double q234 = w.phi;
      const double q5 = -w.theta;
      const double q6 = w.psi;

      const double x = v15.x() - d5 * std::sin(q234);
      const double y = v15.y() + d5 * std::cos(q234);
      const double c3 = (x * x + y * y - a2 * a2 - a3 * a3) / (2.0 * a2 * a3);
      if (std::abs(c3) > 1.0 + kCoalesceTol) continue;
      const bool elbow_degenerate = std::abs(1.0 - c3 * c3) < kCoalesceTol;
      const double q3_mag = std::acos(std::clamp(c3, -1.0, 1.0));

      for (int el = 0; el < 2; ++el) {
        const double q3 = el == 0 ? q3_mag : -q3_mag;
        const double s3 = std::sin(q3);
        const double q2 = std::atan2(y, x) - std::atan2(a3 * s3, a2 + a3 * c3);
        const double q4 = q234 - q2 - q3;
        JointState q;
        q << q1, q2, q3, q4, q5, q6;
        const bool degen = shoulder_degenerate || elbow_degenerate || w.degenerate;
        const int wr = w.theta >= 0.0 ? 0 : 1;
        push_solution(sols, q, {sh, el, wr}, degen);
        if (elbow_degenerate) break;
      }
    }
    if (shoulder_degenerate) break;
  }
  return sols;
}

/*
 * PUMA-like closed form (modified DH chain with a spherical wrist and a
 * lateral shoulder slide d_sh). The wrist center C equals the frame-6 origin
 * (o4 = o5 = o6) and in the frame rotated by q1 reads
 *   (L2 c2 - L3 s23, -d_sh, L2 s2 + L3 c23),
 * so q1 has two branches from the constant lateral coordinate, (q2, q3) is a
 * planar 2R problem with sin(q3) = (L2^2 + L3^2 - r^2) / (2 L2 L3), and the
 * wrist factors as Rx(pi/2) * R36 = Rz(q4) * Ry(-q5) * Rz(q6).
 */
std::vector<IkSolution> solve_puma(const RobotModel& model, const Pose& t06) {
  const double d_sh = model.dh[0].d;
  const double l2 = model.dh[1].a;
  const double l3 = model.dh[2].d;

  std::vector<IkSolution> sols;
  const Vec3 c = t06.position;
  const double rho = std::hypot(c.x(), c.y());
  const double k = rho > 0.0 ? d_sh / rho : 2.0;
  if (std::abs(k) > 1.0 + kCoalesceTol) return sols;
  const bool shoulder_degenerate = std::abs(1.0 - k * k) < kCoalesceTol;
  const double psi = std::atan2(c.y(), c.x());
  const double beta = std::asin(std::clamp(k, -1.0, 1.0));
  // Solves -s1*Cx + c1*Cy = -d_sh  <=>  sin(q1 - psi) = d_sh / rho.
  const double q1_candidates[2] = {psi + beta, psi + kPi - beta};

  for (int sh = 0; sh < 2; ++sh) {
    const double q1 = q1_candidates[sh];
    const double u = std::cos(q1) * c.x() + std::sin(q1) * c.y();
    const double w = c.z();
    const double r2 = u * u + w * w;
    const double s3 = (l2 * l2 + l3 * l3 - r2) / (2.0 * l2 * l3);
    if (std::abs(s3) > 1.0 + kCoalesceTol) continue;
    const bool elbow_degenerate = std::abs(1.0 - s3 * s3) < kCoalesceTol;
    const double q3_base = std::asin(std::clamp(s3, -1.0, 1.0));
    const double q3_candidates[2] = {q3_base, kPi - q3_base};

    for (int el = 0; el < 2; ++el) {
      const double q3 = q3_candidates[el];
      // u = A c2 - B s2, w = A s2 + B c2 with A = L2 - L3 s3, B = L3 c3.
      const double a = l2 - l3 * std::sin(q3);
      const double b = l3 * std::cos(q3);
      const double q2 = std::atan2(w, u) - std::atan2(b, a);

      const Rotation r03 = Rotation::rot_z(q1) * Rotation::rot_x(kPi / 2) *
                           Rotation::rot_z(q2 + q3);
      const Mat3 e =
          (Rotation::rot_x(kPi / 2) * (r03.inverse() * t06.orientation)).matrix();
      for (const Zyz& wr : euler_zyz(e)) {
        JointState q;
        q << q1, q2, q3, wr.phi, -wr.theta, wr.psi;
        const bool degen = shoulder_degenerate || elbow_degenerate || wr.degenerate;
        const int wrb = wr.theta >= 0.0 ? 0 : 1;
        push_solution(sols, q, {sh, el, wrb}, degen);
      }
      if (elbow_degenerate) break;
    }
    if (shoulder_degenerate) break;
  }
  return sols;
}

}  // namespace

std::string IkSolution::label() const {
  std::string s;
  s += branch[0] == 0 ? "SR" : "SL";
  s += branch[1] == 0 ? "-EU" : "-ED";
  s += branch[2] == 0 ? "-WP" : "-WN";
  return s;
}

IkSolutionSet solve_ik(const RobotModel& model, const Pose& target) {
  if (!target.position.allFinite()) {
    throw std::invalid_argument("solve_ik: non-finite target");
  }
  const Pose t06 = target * model.tcp.transform.inverse();
  std::vector<IkSolution> sols;
  switch (model.morphology) {
    case Morphology::kUrLike:
      sols = solve_ur(model, t06);
      break;
    case Morphology::kPumaLike:
      sols = solve_puma(model, t06);
      break;
    default:
      throw std::invalid_argument("solve_ik: unsupported morphology");
  }
  std::sort(sols.begin(), sols.end(), [](const IkSolution& a, const IkSolution& b) {
    return a.branch < b.branch;
  });
  IkSolutionSet set;
  set.solutions = std::move(sols);
  return set;
}

double joint_distance_maxnorm(const JointState& a, const JointState& b) {
  double d = 0.0;
  for (int i = 0; i < 6; ++i) {
    d = std::max(d, std::abs(wrap_angle(a[i] - b[i])));
  }
  return d;
}

JointState nearest_solution(const IkSolutionSet& set, const JointState& reference) {
  if (set.empty()) throw NoSolutionError("nearest_solution: empty solution set");
  const IkSolution* best = nullptr;
  double best_d = std::numeric_limits<double>::infinity();
  for (const IkSolution& s : set.solutions) {
    const double d = joint_distance_maxnorm(s.q, reference);
    if (d < best_d) {
      best_d = d;
      best = &s;
    }
  }
  return best->q;
}

}  // namespace weldfeas
