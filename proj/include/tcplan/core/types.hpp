#pragma once

#include <Eigen/Dense>

#include <string>
#include <utility>
#include <vector>

namespace tcplan {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Tolerance on unit-norm invariants of sphere and projective representatives.
inline constexpr double kUnitTolerance = 1e-12;
/// Tolerance used for projective equality and for path endpoint/joint agreement.
inline constexpr double kPathTolerance = 1e-9;

/// A point of the unit sphere S^m embedded in R^{m+1}.
class SpherePoint {
 public:
  /// Throws InvalidInput unless |coords| = 1 within kUnitTolerance.
  explicit SpherePoint(Vector coords);
  /// Normalizes `v`; throws InvalidInput on a zero or non-finite vector.
  static SpherePoint normalized(const Vector& v);

  const Vector& coords() const noexcept { return coords_; }
  Index ambient_dim() const noexcept { return coords_.size(); }

 private:
  Vector coords_;
};

/// A point [x] of RP^3 stored through a unit representative in R^4 = H.
class ProjectivePoint {
 public:
  explicit ProjectivePoint(const Eigen::Vector4d& rep);
  static ProjectivePoint normalized(const Eigen::Vector4d& v);
  static ProjectivePoint identity() { return ProjectivePoint(Eigen::Vector4d(1, 0, 0, 0)); }

  const Eigen::Vector4d& rep() const noexcept { return rep_; }
  /// Representative whose first coordinate above 1e-12 in magnitude is positive.
  ProjectivePoint canonical() const;
  ProjectivePoint operator-() const { return ProjectivePoint(-rep_); }

 private:
  Eigen::Vector4d rep_;
};

/// min(|x - y|, |x + y|) on unit representatives; metrizes RP^3.
double projective_distance(const Eigen::Vector4d& x, const Eigen::Vector4d& y);
double projective_distance(const ProjectivePoint& a, const ProjectivePoint& b);
bool projectively_equal(const ProjectivePoint& a, const ProjectivePoint& b,
                        double tol = kPathTolerance);

/// An ordered configuration of k >= 2 pairwise distinct points of R^d,
/// stored as a d x k matrix whose columns are the points.
class Configuration {
 public:
  explicit Configuration(Matrix points);
  /// Reshapes a flat column-major vector of length d*k.
  static Configuration from_flat(const Vector& flat, Index d);

  const Matrix& points() const noexcept { return points_; }
  auto point(Index i) const { return points_.col(i); }
  Index dim() const noexcept { return points_.rows(); }
  Index size() const noexcept { return points_.cols(); }
  Vector flat() const;

 private:
  Matrix points_;
};

/// A configuration whose pairwise distances all exceed 2r.
class ThickConfiguration {
 public:
  ThickConfiguration(Configuration config, double radius);

  const Configuration& config() const noexcept { return config_; }
  const Matrix& points() const noexcept { return config_.points(); }
  double radius() const noexcept { return radius_; }

 private:
  Configuration config_;
  double radius_;
};

/// Orientations and positions of k rigid bodies in R^d, d in {2, 3}.
/// Orientations are unit complex numbers (d = 2) or unit quaternions up to
/// sign (d = 3).
class RigidState {
 public:
  RigidState(std::vector<Vector> orientations, ThickConfiguration positions);

  Index dim() const noexcept { return positions_.config().dim(); }
  Index bodies() const noexcept { return positions_.config().size(); }
  const std::vector<Vector>& orientations() const noexcept { return orientations_; }
  const ThickConfiguration& positions() const noexcept { return positions_; }

  /// Orientations block followed by the column-major positions block.
  Vector flat() const;
  static RigidState from_flat(const Vector& flat, Index d, Index k, double radius);

 private:
  std::vector<Vector> orientations_;
  ThickConfiguration positions_;
};

inline Index orientation_dim(Index d) { return d == 2 ? 2 : 4; }

/// Label of the domain of continuity holding a (start, goal) pair, together
/// with the per-factor stratum data that produced it.
struct DomainIndex {
  int ell = 0;
  std::vector<std::pair<std::string, int>> strata;

  bool operator==(const DomainIndex&) const = default;
};

}  // namespace tcplan
