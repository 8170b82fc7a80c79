#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <array>

#include "kincal/errors.hpp"

namespace kincal {

using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat6 = Eigen::Matrix<double, 6, 6>;

/// Tangent-space coordinates of SE(3), rotation part first.
///
/// The (omega, rho) ordering is fixed project-wide: every 6-vector and every
/// 6x6 covariance/information block uses rows 0-2 for rotation (rad) and
/// rows 3-5 for translation (m).
struct Twist {
  Vec3 omega = Vec3::Zero();  ///< rotational part [rad]
  Vec3 rho = Vec3::Zero();    ///< translational part [m]

  Twist() = default;
  Twist(const Vec3& w, const Vec3& r) : omega(w), rho(r) {}

  Vec6 vector() const {
    Vec6 v;
    v << omega, rho;
    return v;
  }
  static Twist from_vector(const Vec6& v) { return {v.head<3>(), v.tail<3>()}; }
  static Twist zero() { return {}; }
};

/// A rotation stored as a unit quaternion with canonical sign (w >= 0).
///
/// Every operation renormalizes, so chained compositions cannot drift.
class Rotation {
 public:
  Rotation() : q_(1.0, 0.0, 0.0, 0.0) {}

  /// Builds from quaternion components; normalizes and canonicalizes.
  static Rotation from_quaternion(double w, double x, double y, double z);
  static Rotation from_matrix(const Mat3& m);
  /// Rotation of `angle` radians about a unit axis.
  static Rotation about_axis(const Vec3& unit_axis, double angle);

  /// SO(3) exponential of a rotation vector.
  static Rotation exp(const Vec3& omega);
  /// SO(3) logarithm. Throws AngleNearPi when the angle is >= pi - 1e-6.
  Vec3 log() const;

  /// Rotation angle in [0, pi].
  double angle() const;

  Rotation operator*(const Rotation& other) const;
  Vec3 operator*(const Vec3& v) const { return q_ * v; }
  Rotation inverse() const;

  Mat3 matrix() const { return q_.toRotationMatrix(); }

  double w() const { return q_.w(); }
  double x() const { return q_.x(); }
  double y() const { return q_.y(); }
  double z() const { return q_.z(); }
  const Eigen::Quaterniond& quaternion() const { return q_; }

 private:
  explicit Rotation(const Eigen::Quaterniond& q) : q_(q) {}
  static Eigen::Quaterniond canonicalize(Eigen::Quaterniond q);

  Eigen::Quaterniond q_;  // unit norm, w >= 0
};

/// A rigid-body transform: rotation plus translation in meters.
///
/// compose(a, b) = a * b maps coordinates in b's child frame into a's parent
/// frame. The local chart is the right perturbation p * exp(delta).
class Pose {
 public:
  Pose() = default;
  Pose(const Rotation& r, const Vec3& t) : rotation_(r), translation_(t) {}

  static Pose identity() { return {}; }
  /// Pure translation.
  static Pose from_translation(const Vec3& t) { return {Rotation{}, t}; }

  /// Closed-form SE(3) exponential (Rodrigues rotation plus V-matrix
  /// translation coupling).
  static Pose exp(const Twist& xi);
  /// SE(3) logarithm; throws AngleNearPi near the chart boundary.
  Twist log() const;

  Pose operator*(const Pose& other) const;
  Vec3 operator*(const Vec3& p) const {
    return rotation_ * p + translation_;
  }
  Pose inverse() const;

  /// Right/local perturbation: *this * exp(delta).
  Pose retract(const Twist& delta) const { return *this * Pose::exp(delta); }
  /// Chart coordinates of `other` around *this: log(this^-1 * other).
  Twist local_coordinates(const Pose& other) const {
    return (inverse() * other).log();
  }

  /// 6x6 adjoint in the (omega, rho) ordering: Ad * xi = log(T exp(xi) T^-1).
  Mat6 adjoint() const;

  Mat4 matrix() const;

  const Rotation& rotation() const { return rotation_; }
  const Vec3& translation() const { return translation_; }

  /// Wire format shared by all file schemas: [x, y, z, qw, qx, qy, qz].
  std::array<double, 7> serialize() const;
  static Pose deserialize(const std::array<double, 7>& p);

 private:
  Rotation rotation_;
  Vec3 translation_ = Vec3::Zero();
};

Mat3 skew(const Vec3& v);

/// SO(3) left Jacobian (the V matrix of the SE(3) exponential).
Mat3 so3_left_jacobian(const Vec3& omega);
Mat3 so3_left_jacobian_inverse(const Vec3& omega);

/// SE(3) left/right Jacobians of the exponential map and their inverses,
/// in the (omega, rho) block ordering. These drive the analytic factor
/// Jacobians: d/d_delta log(exp(xi) exp(delta)) at delta=0 equals
/// se3_right_jacobian_inverse(xi).
Mat6 se3_left_jacobian(const Twist& xi);
Mat6 se3_left_jacobian_inverse(const Twist& xi);
Mat6 se3_right_jacobian(const Twist& xi);
Mat6 se3_right_jacobian_inverse(const Twist& xi);

}  // namespace kincal
