#include <tcplan/core/quaternion.hpp>

namespace tcplan {

ProjectivePoint quat_mul(const ProjectivePoint& a, const ProjectivePoint& b) {
  // Unit quaternions multiply to a unit quaternion; renormalize away rounding.
  return ProjectivePoint::normalized(quat_product(a.rep(), b.rep()));
}

ProjectivePoint quat_inv(const ProjectivePoint& a) { return ProjectivePoint(quat_conjugate(a.rep())); }

}  // namespace tcplan
