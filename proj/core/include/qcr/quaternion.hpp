#pragma once

#include <array>
#include <cmath>
#include <iosfwd>

namespace qcr {

// Real quaternion c1 + c2 i + c3 j + c4 k. Component order (scalar, i, j, k)
// is used by every interchange format.
struct Quaternion {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
  double c4 = 0.0;

  static constexpr Quaternion one() { return {1.0, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion k() { return {0.0, 0.0, 0.0, 1.0}; }

  static constexpr Quaternion from_array(const std::array<double, 4>& a) {
    return {a[0], a[1], a[2], a[3]};
  }
  constexpr std::array<double, 4> to_array() const { return {c1, c2, c3, c4}; }

  constexpr double operator[](int index) const {
    switch (index) {
      case 0: return c1;
      case 1: return c2;
      case 2: return c3;
      default: return c4;
    }
  }

  friend constexpr bool operator==(const Quaternion&,
                                   const Quaternion&) = default;
};

// Hamilton product, i^2 = j^2 = k^2 = ijk = -1.
constexpr Quaternion hamilton_mul(const Quaternion& p, const Quaternion& q) {
  return {
      p.c1 * q.c1 - p.c2 * q.c2 - p.c3 * q.c3 - p.c4 * q.c4,
      p.c1 * q.c2 + p.c2 * q.c1 + p.c3 * q.c4 - p.c4 * q.c3,
      p.c1 * q.c3 - p.c2 * q.c4 + p.c3 * q.c1 + p.c4 * q.c2,
      p.c1 * q.c4 + p.c2 * q.c3 - p.c3 * q.c2 + p.c4 * q.c1,
  };
}

constexpr Quaternion add(const Quaternion& p, const Quaternion& q) {
  return {p.c1 + q.c1, p.c2 + q.c2, p.c3 + q.c3, p.c4 + q.c4};
}

constexpr Quaternion sub(const Quaternion& p, const Quaternion& q) {
  return {p.c1 - q.c1, p.c2 - q.c2, p.c3 - q.c3, p.c4 - q.c4};
}

constexpr Quaternion scale(double s, const Quaternion& q) {
  return {s * q.c1, s * q.c2, s * q.c3, s * q.c4};
}

constexpr Quaternion conjugate(const Quaternion& q) {
  return {q.c1, -q.c2, -q.c3, -q.c4};
}

inline double norm(const Quaternion& q) {
  return std::sqrt(q.c1 * q.c1 + q.c2 * q.c2 + q.c3 * q.c3 + q.c4 * q.c4);
}

// Throws DomainError for the zero quaternion.
Quaternion inverse(const Quaternion& q);

constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) {
  return add(p, q);
}
constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) {
  return sub(p, q);
}
constexpr Quaternion operator-(const Quaternion& q) { return scale(-1.0, q); }
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return hamilton_mul(p, q);
}
constexpr Quaternion operator*(double s, const Quaternion& q) {
  return scale(s, q);
}

// Largest absolute component difference.
double max_abs_diff(const Quaternion& p, const Quaternion& q);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qcr
