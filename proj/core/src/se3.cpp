#include "kincal/se3.hpp"

#include <cmath>

namespace kincal {
namespace {

// Spec'd chart boundaries.
constexpr double kLogAngleLimit = M_PI - 1e-6;

// Coefficient helpers switch to their series well before the closed forms
// start cancelling; at the switch point both branches agree to ~1e-15.
constexpr double kSeriesAngle = 1e-4;
constexpr double kSeriesAngleQ = 0.1;

// sin(t/2)/t
double sinc_half(double t) {
  if (t < kSeriesAngle) {
    const double t2 = t * t;
    return 0.5 - t2 / 48.0 + t2 * t2 / 3840.0;
  }
  return std::sin(0.5 * t) / t;
}

// (1 - cos t)/t^2, evaluated as 2 sin^2(t/2)/t^2 to avoid cancellation
double one_minus_cos_over_t2(double t) {
  if (t < kSeriesAngle) {
    const double t2 = t * t;
    return 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
  }
  const double s = std::sin(0.5 * t);
  return 2.0 * s * s / (t * t);
}

// (t - sin t)/t^3
double t_minus_sin_over_t3(double t) {
  if (t < kSeriesAngleQ) {
    const double t2 = t * t;
    return 1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0;
  }
  return (t - std::sin(t)) / (t * t * t);
}

// 1/t^2 - (1 + cos t)/(2 t sin t), the Jl^-1 coefficient
double jl_inv_coeff(double t) {
  if (t < kSeriesAngleQ) {
    const double t2 = t * t;
    return 1.0 / 12.0 + t2 / 720.0 + t2 * t2 / 30240.0;
  }
  return 1.0 / (t * t) - (1.0 + std::cos(t)) / (2.0 * t * std::sin(t));
}

// (1 - t^2/2 - cos t)/t^4
double q_coeff2(double t) {
  if (t < kSeriesAngleQ) {
    const double t2 = t * t;
    return -1.0 / 24.0 + t2 / 720.0 - t2 * t2 / 40320.0;
  }
  const double t2 = t * t;
  return (1.0 - 0.5 * t2 - std::cos(t)) / (t2 * t2);
}

// (t - sin t - t^3/6)/t^5
double q_coeff3(double t) {
  if (t < kSeriesAngleQ) {
    const double t2 = t * t;
    return -1.0 / 120.0 + t2 / 5040.0 - t2 * t2 / 362880.0;
  }
  const double t2 = t * t;
  return (t - std::sin(t) - t2 * t / 6.0) / (t2 * t2 * t);
}

// Translation coupling block of the SE(3) left Jacobian (Barfoot's Q).
Mat3 se3_q_matrix(const Twist& xi) {
  const double t = xi.omega.norm();
  const Mat3 W = skew(xi.omega);
  const Mat3 P = skew(xi.rho);
  const Mat3 WP = W * P;
  const Mat3 PW = P * W;
  const Mat3 WPW = WP * W;
  const double c1 = t_minus_sin_over_t3(t);
  const double c2 = q_coeff2(t);
  const double c3 = q_coeff3(t);
  Mat3 q = 0.5 * P;
  q += c1 * (WP + PW + WPW);
  q -= c2 * (W * WP + PW * W - 3.0 * WPW);
  q -= 0.5 * (c2 - 3.0 * c3) * (WPW * W + W * WPW);
  return q;
}

}  // namespace

Mat3 skew(const Vec3& v) {
  Mat3 m;
  m << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  return m;
}

Eigen::Quaterniond Rotation::canonicalize(Eigen::Quaterniond q) {
  q.normalize();
  if (q.w() < 0.0) q.coeffs() = -q.coeffs();
  return q;
}

Rotation Rotation::from_quaternion(double w, double x, double y, double z) {
  return Rotation(canonicalize(Eigen::Quaterniond(w, x, y, z)));
}

Rotation Rotation::from_matrix(const Mat3& m) {
  return Rotation(canonicalize(Eigen::Quaterniond(m)));
}

Rotation Rotation::about_axis(const Vec3& unit_axis, double angle) {
  return exp(unit_axis * angle);
}

Rotation Rotation::exp(const Vec3& omega) {
  const double t = omega.norm();
  const double w = std::cos(0.5 * t);
  const Vec3 v = sinc_half(t) * omega;
  return Rotation(canonicalize(Eigen::Quaterniond(w, v.x(), v.y(), v.z())));
}

Vec3 Rotation::log() const {
  const Vec3 v(q_.x(), q_.y(), q_.z());
  const double s = v.norm();
  const double w = q_.w();  // >= 0 by canonical sign
  const double angle = 2.0 * std::atan2(s, w);
  if (angle >= kLogAngleLimit) throw AngleNearPi(angle);
  if (s < 1e-8) {
    // theta/s -> 2/w * (1 - s^2/(3 w^2))
    return v * (2.0 / w) * (1.0 - s * s / (3.0 * w * w));
  }
  return v * (angle / s);
}

double Rotation::angle() const {
  const Vec3 v(q_.x(), q_.y(), q_.z());
  return 2.0 * std::atan2(v.norm(), q_.w());
}

Rotation Rotation::operator*(const Rotation& other) const {
  return Rotation(canonicalize(q_ * other.q_));
}

Rotation Rotation::inverse() const {
  return Rotation(canonicalize(q_.conjugate()));
}

Pose Pose::exp(const Twist& xi) {
  const Rotation r = Rotation::exp(xi.omega);
  return Pose(r, so3_left_jacobian(xi.omega) * xi.rho);
}

Twist Pose::log() const {
  const Vec3 omega = rotation_.log();
  return Twist(omega, so3_left_jacobian_inverse(omega) * translation_);
}

Pose Pose::operator*(const Pose& other) const {
  return Pose(rotation_ * other.rotation_,
              rotation_ * other.translation_ + translation_);
}

Pose Pose::inverse() const {
  const Rotation rinv = rotation_.inverse();
  return Pose(rinv, -(rinv * translation_));
}

Mat6 Pose::adjoint() const {
  const Mat3 r = rotation_.matrix();
  Mat6 ad = Mat6::Zero();
  ad.topLeftCorner<3, 3>() = r;
  ad.bottomRightCorner<3, 3>() = r;
  ad.bottomLeftCorner<3, 3>() = skew(translation_) * r;
  return ad;
}

Mat4 Pose::matrix() const {
  Mat4 m = Mat4::Identity();
  m.topLeftCorner<3, 3>() = rotation_.matrix();
  m.topRightCorner<3, 1>() = translation_;
  return m;
}

std::array<double, 7> Pose::serialize() const {
  return {translation_.x(), translation_.y(), translation_.z(),
          rotation_.w(),    rotation_.x(),    rotation_.y(),
          rotation_.z()};
}

Pose Pose::deserialize(const std::array<double, 7>& p) {
  return Pose(Rotation::from_quaternion(p[3], p[4], p[5], p[6]),
              Vec3(p[0], p[1], p[2]));
}

Mat3 so3_left_jacobian(const Vec3& omega) {
  const double t = omega.norm();
  const Mat3 w = skew(omega);
  return Mat3::Identity() + one_minus_cos_over_t2(t) * w +
         t_minus_sin_over_t3(t) * (w * w);
}

Mat3 so3_left_jacobian_inverse(const Vec3& omega) {
  const double t = omega.norm();
  const Mat3 w = skew(omega);
  return Mat3::Identity() - 0.5 * w + jl_inv_coeff(t) * (w * w);
}

Mat6 se3_left_jacobian(const Twist& xi) {
  const Mat3 j = so3_left_jacobian(xi.omega);
  Mat6 out = Mat6::Zero();
  out.topLeftCorner<3, 3>() = j;
  out.bottomRightCorner<3, 3>() = j;
  out.bottomLeftCorner<3, 3>() = se3_q_matrix(xi);
  return out;
}

Mat6 se3_left_jacobian_inverse(const Twist& xi) {
  const Mat3 jinv = so3_left_jacobian_inverse(xi.omega);
  Mat6 out = Mat6::Zero();
  out.topLeftCorner<3, 3>() = jinv;
  out.bottomRightCorner<3, 3>() = jinv;
  out.bottomLeftCorner<3, 3>() = -jinv * se3_q_matrix(xi) * jinv;
  return out;
}

Mat6 se3_right_jacobian(const Twist& xi) {
  return se3_left_jacobian(Twist(-xi.omega, -xi.rho));
}

Mat6 se3_right_jacobian_inverse(const Twist& xi) {
  return se3_left_jacobian_inverse(Twist(-xi.omega, -xi.rho));
}

}  // namespace kincal
