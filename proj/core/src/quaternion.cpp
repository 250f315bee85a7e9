#include "qcr/quaternion.hpp"

#include <algorithm>
#include <ostream>

#include "qcr/errors.hpp"

namespace qcr {

Quaternion inverse(const Quaternion& q) {
  const double n2 = q.c1 * q.c1 + q.c2 * q.c2 + q.c3 * q.c3 + q.c4 * q.c4;
  if (!(n2 > 0.0)) {
    throw DomainError("inverse: zero quaternion has no inverse");
  }
  return scale(1.0 / n2, conjugate(q));
}

double max_abs_diff(const Quaternion& p, const Quaternion& q) {
  return std::max({std::abs(p.c1 - q.c1), std::abs(p.c2 - q.c2),
                   std::abs(p.c3 - q.c3), std::abs(p.c4 - q.c4)});
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.c1 << ", " << q.c2 << ", " << q.c3 << ", " << q.c4
            << ')';
}

}  // namespace qcr
