#pragma once

// Shared test utilities: independent oracles (4x4 homogeneous-matrix algebra,
// central finite differences) and deterministic random generators. Nothing in
// here may call back into the code path it is used to check.

#include <Eigen/Dense>

#include <functional>
#include <random>

#include "kincal/se3.hpp"

namespace kincal::test {

// ---------------------------------------------------------------- oracles

// Composes two poses through plain 4x4 homogeneous matrices.
inline Eigen::Matrix4d matrix_compose(const Eigen::Matrix4d& a,
                                      const Eigen::Matrix4d& b) {
  return a * b;
}

inline Eigen::Matrix4d matrix_inverse(const Eigen::Matrix4d& m) {
  return m.inverse();
}

// Rodrigues' rotation formula, written out independently of Rotation::exp.
inline Eigen::Matrix3d rodrigues(const Vec3& omega) {
  const double t = omega.norm();
  if (t < 1e-14) return Eigen::Matrix3d::Identity();
  const Vec3 u = omega / t;
  Eigen::Matrix3d k;
  k << 0, -u.z(), u.y(), u.z(), 0, -u.x(), -u.y(), u.x(), 0;
  return Eigen::Matrix3d::Identity() + std::sin(t) * k +
         (1.0 - std::cos(t)) * (k * k);
}

// Central-difference Jacobian of a vector function of a 6-vector.
inline Eigen::MatrixXd central_difference(
    const std::function<Eigen::VectorXd(const Vec6&)>& f, const Vec6& x,
    double h = 1e-6) {
  const Eigen::VectorXd f0 = f(x);
  Eigen::MatrixXd jac(f0.size(), 6);
  for (int i = 0; i < 6; ++i) {
    Vec6 xp = x;
    Vec6 xm = x;
    xp[i] += h;
    xm[i] -= h;
    jac.col(i) = (f(xp) - f(xm)) / (2.0 * h);
  }
  return jac;
}

// Central-difference Jacobian of a twist-valued function of a pose retraction:
//   J approx d/d_delta f(p.retract(delta)) at delta = 0.
inline Mat6 pose_jacobian_fd(const std::function<Vec6(const Pose&)>& f,
                             const Pose& p, double h = 1e-6) {
  Mat6 jac;
  for (int i = 0; i < 6; ++i) {
    Vec6 dp = Vec6::Zero();
    dp[i] = h;
    Vec6 dm = -dp;
    jac.col(i) = (f(p.retract(Twist::from_vector(dp))) -
                  f(p.retract(Twist::from_vector(dm)))) /
                 (2.0 * h);
  }
  return jac;
}

inline double max_rel_error(const Eigen::MatrixXd& a,
                            const Eigen::MatrixXd& b) {
  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  return (a - b).cwiseAbs().maxCoeff() / scale;
}

// ------------------------------------------------------------- generators

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline Vec3 random_unit_vector(std::mt19937_64& gen) {
  std::normal_distribution<double> n(0.0, 1.0);
  Vec3 v(n(gen), n(gen), n(gen));
  while (v.norm() < 1e-6) v = Vec3(n(gen), n(gen), n(gen));
  return v.normalized();
}

// Twist with rotation magnitude uniform in [0, max_angle].
inline Twist random_twist(std::mt19937_64& gen, double max_angle = 2.5,
                          double max_trans = 2.0) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const Vec3 omega = random_unit_vector(gen) * (u(gen) * max_angle);
  const Vec3 rho = random_unit_vector(gen) * (u(gen) * max_trans);
  return Twist(omega, rho);
}

inline Pose random_pose(std::mt19937_64& gen, double max_angle = 2.5,
                        double max_trans = 2.0) {
  return Pose::exp(random_twist(gen, max_angle, max_trans));
}

inline bool pose_near(const Pose& a, const Pose& b, double tol_rot_rad,
                      double tol_trans_m) {
  const double dr = (a.rotation().inverse() * b.rotation()).angle();
  const double dt = (a.translation() - b.translation()).norm();
  return dr <= tol_rot_rad && dt <= tol_trans_m;
}

}  // namespace kincal::test
