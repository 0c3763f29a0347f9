#pragma once

// Homotopy equivalence between the thin configuration space F(R^d, k) and the
// thick space F_r(R^d, k) of k nonoverlapping balls of radius r.

#include <tcplan/core/error.hpp>
#include <tcplan/core/types.hpp>

#include <cmath>
#include <limits>

namespace tcplan {

/// Half the minimum pairwise distance between the columns of `points`.
template <typename Derived>
typename Derived::Scalar chi(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  const Index k = points.cols();
  if (k < 2) throw InvalidInput("chi: need at least two points");
  Scalar best = std::numeric_limits<Scalar>::infinity();
  for (Index i = 0; i < k; ++i) {
    for (Index j = i + 1; j < k; ++j) {
      const Scalar dist = (points.col(i) - points.col(j)).norm();
      if (dist < best) best = dist;
    }
  }
  return best / Scalar(2);
}

/// (chi(p) + 2 r t) / chi(p), the scale factor of the homotopy at time t.
template <typename Derived>
typename Derived::Scalar thickening_factor(const Eigen::MatrixBase<Derived>& points,
                                           typename Derived::Scalar r,
                                           typename Derived::Scalar t) {
  const auto c = chi(points);
  return (c + 2 * r * t) / c;
}

inline double chi(const Configuration& c) { return chi(c.points()); }
inline double chi(const ThickConfiguration& c) { return chi(c.points()); }

/// rho(c) = ((chi(c) + 2r) / chi(c)) c, landing in F_r with chi = chi(c) + 2r.
ThickConfiguration rho(const Configuration& c, double r);

/// H^(c, t) = ((chi(c) + 2 r t) / chi(c)) c; identity at t = 0 and rho at t = 1.
ThickConfiguration hat_homotopy(const ThickConfiguration& c, double t);

}  // namespace tcplan
