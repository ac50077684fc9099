#pragma once

#include <array>
#include <cmath>

#include <Eigen/Core>

namespace radar_tr {

constexpr double kPi = 3.14159265358979323846;

/// Wraps an angle into (-pi, pi].
inline double wrap_angle(double a) {
  a = std::fmod(a, 2.0 * kPi);
  if (a > kPi) {
    a -= 2.0 * kPi;
  } else if (a <= -kPi) {
    a += 2.0 * kPi;
  }
  return a;
}

/// Planar rigid transform (x, y, theta) with theta kept in (-pi, pi].
struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  static Pose2 identity() { return {}; }
};

/// Body-frame twist rate: longitudinal, lateral, angular velocity.
struct Velocity {
  double vx = 0.0;
  double vy = 0.0;
  double omega = 0.0;

  bool is_finite() const {
    return std::isfinite(vx) && std::isfinite(vy) && std::isfinite(omega);
  }
};

inline Pose2 pose_compose(const Pose2& a, const Pose2& b) {
  const double c = std::cos(a.theta);
  const double s = std::sin(a.theta);
  return {a.x + c * b.x - s * b.y, a.y + s * b.x + c * b.y,
          wrap_angle(a.theta + b.theta)};
}

inline Pose2 pose_inverse(const Pose2& a) {
  const double c = std::cos(a.theta);
  const double s = std::sin(a.theta);
  return {-(c * a.x + s * a.y), s * a.x - c * a.y, wrap_angle(-a.theta)};
}

/// Transforms a point from the pose's local frame into its parent frame.
inline Eigen::Vector2d transform_point(const Pose2& p, const Eigen::Vector2d& v) {
  const double c = std::cos(p.theta);
  const double s = std::sin(p.theta);
  return {p.x + c * v.x() - s * v.y(), p.y + s * v.x() + c * v.y()};
}

inline Eigen::Matrix2d rotation_matrix(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

struct PoseDelta {
  double translation = 0.0;  // meters
  double rotation = 0.0;     // radians, absolute value
};

/// Relative motion a -> b, decomposed into translation norm and |angle|.
inline PoseDelta pose_log_delta(const Pose2& a, const Pose2& b) {
  const Pose2 d = pose_compose(pose_inverse(a), b);
  return {std::hypot(d.x, d.y), std::abs(d.theta)};
}

/// Closed-form SE(2) exponential of the twist (rho_x, rho_y, phi).
/// Exact for phi = 0 (pure translation), so a zero twist maps bit-exactly
/// to the identity pose.
inline Pose2 se2_exp(double rho_x, double rho_y, double phi) {
  double a, b;
  if (std::abs(phi) < 1e-9) {
    const double p2 = phi * phi;
    a = 1.0 - p2 / 6.0;
    b = phi * (0.5 - p2 / 24.0);
  } else {
    a = std::sin(phi) / phi;
    b = (1.0 - std::cos(phi)) / phi;
  }
  return {a * rho_x - b * rho_y, b * rho_x + a * rho_y, wrap_angle(phi)};
}

inline Pose2 se2_exp(const Velocity& v, double dt) {
  return se2_exp(v.vx * dt, v.vy * dt, v.omega * dt);
}

/// SE(2) logarithm; inverse of se2_exp for theta in (-pi, pi].
inline std::array<double, 3> se2_log(const Pose2& p) {
  const double phi = p.theta;
  double a, b;
  if (std::abs(phi) < 1e-9) {
    const double p2 = phi * phi;
    a = 1.0 - p2 / 6.0;
    b = phi * (0.5 - p2 / 24.0);
  } else {
    a = std::sin(phi) / phi;
    b = (1.0 - std::cos(phi)) / phi;
  }
  const double det = a * a + b * b;
  return {(a * p.x + b * p.y) / det, (-b * p.x + a * p.y) / det, phi};
}

/// Constant twist that reproduces the pose increment over dt seconds.
inline Velocity twist_between(const Pose2& from, const Pose2& to, double dt) {
  const auto xi = se2_log(pose_compose(pose_inverse(from), to));
  return {xi[0] / dt, xi[1] / dt, xi[2] / dt};
}

}  // namespace radar_tr
