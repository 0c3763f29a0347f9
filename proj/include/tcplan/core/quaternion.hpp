#pragma once

#include <tcplan/core/types.hpp>

namespace tcplan {

/// Quaternion product of representatives, written as four inner products
/// <x, (y1,-y2,-y3,-y4)>, <x, (y2,y1,y4,-y3)>, <x, (y3,-y4,y1,y2)>, <x, (y4,y3,-y2,y1)>.
template <typename DerivedX, typename DerivedY>
Eigen::Matrix<typename DerivedX::Scalar, 4, 1> quat_product(const Eigen::MatrixBase<DerivedX>& x,
                                                            const Eigen::MatrixBase<DerivedY>& y) {
  using V4 = Eigen::Matrix<typename DerivedX::Scalar, 4, 1>;
  return V4(x.dot(V4(y(0), -y(1), -y(2), -y(3))), x.dot(V4(y(1), y(0), y(3), -y(2))),
            x.dot(V4(y(2), -y(3), y(0), y(1))), x.dot(V4(y(3), y(2), -y(1), y(0))));
}

template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, 4, 1> quat_conjugate(const Eigen::MatrixBase<Derived>& x) {
  return {x(0), -x(1), -x(2), -x(3)};
}

/// Group product on RP^3; well defined up to sign of either factor.
ProjectivePoint quat_mul(const ProjectivePoint& a, const ProjectivePoint& b);
/// Inverse by quaternionic conjugation.
ProjectivePoint quat_inv(const ProjectivePoint& a);

}  // namespace tcplan
