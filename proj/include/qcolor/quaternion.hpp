#pragma once

// Real quaternions q = w + x i + y j + z k with the Hamilton table
//   i^2 = j^2 = k^2 = ijk = -1,  ij = k, jk = i, ki = j.
//
// Some sources print "ki = -ik = -j"; that rule is not associative with
// ij = k and jk = i, so the standard table is used throughout.

#include <cmath>
#include <stdexcept>

namespace qcolor {

struct Quaternion {
  double w = 0.0;  // scalar part
  double x = 0.0;  // i
  double y = 0.0;  // j
  double z = 0.0;  // k

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion operator+(const Quaternion& o) const {
    return {w + o.w, x + o.x, y + o.y, z + o.z};
  }
  constexpr Quaternion operator-(const Quaternion& o) const {
    return {w - o.w, x - o.x, y - o.y, z - o.z};
  }
  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }

  // Hamilton product; not commutative.
  constexpr Quaternion operator*(const Quaternion& o) const {
    return {w * o.w - x * o.x - y * o.y - z * o.z,
            w * o.x + x * o.w + y * o.z - z * o.y,
            w * o.y - x * o.z + y * o.w + z * o.x,
            w * o.z + x * o.y - y * o.x + z * o.w};
  }

  constexpr Quaternion operator*(double c) const { return {w * c, x * c, y * c, z * c}; }
};

inline constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kK{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion qmul(const Quaternion& p, const Quaternion& q) { return p * q; }

constexpr Quaternion qconj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

constexpr Quaternion qscale(const Quaternion& q, double c) { return q * c; }

constexpr double qnorm2(const Quaternion& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double qmod(const Quaternion& q) { return std::sqrt(qnorm2(q)); }

/// Exponential kernel cos(theta) - axis * sin(theta) for a pure unit axis.
/// Throws std::invalid_argument when the axis has a scalar part or is not
/// of unit length (1e-12).
inline Quaternion unit_kernel(const Quaternion& axis, double theta) {
  if (std::abs(axis.w) > 1e-12 || std::abs(qnorm2(axis) - 1.0) > 1e-12) {
    throw std::invalid_argument("unit_kernel: axis must be a pure unit quaternion");
  }
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {c, -axis.x * s, -axis.y * s, -axis.z * s};
}

}  // namespace qcolor
