#pragma once

// Continuous paths [0,1] -> R^N stored as closed-form segment trees.
//
// A Path is an immutable handle to a tree of nodes. Leaves are closed-form
// curves; inner nodes concatenate, reparametrize, take products or apply a
// pointwise map. Evaluation writes into a caller-provided buffer and does not
// allocate. Where two concatenated segments meet, the later segment wins.

#include <tcplan/core/types.hpp>

#include <memory>
#include <vector>

namespace tcplan {

enum class SegmentKind {
  Linear,
  NormalizedLinear,
  GreatArc,
  ScalarRescale,
  ChartContraction,
  GroupTranslate,
  RigidRotation,
  Concatenation,
  Product,
  Reparametrization,
};

const char* to_string(SegmentKind kind);

/// Which segment owns a shared endpoint.
enum class Side { Later, Earlier };

namespace detail {

class PathNode {
 public:
  virtual ~PathNode() = default;
  /// `s` is in [0,1]; `out` has size dim().
  virtual void eval_into(double s, Side side, Eigen::Ref<Vector> out) const = 0;
  virtual Index dim() const = 0;
  virtual SegmentKind kind() const = 0;
  /// Interior parameters in (0,1) where the node joins two segments.
  virtual std::vector<double> breakpoints() const { return {}; }
};

}  // namespace detail

class Path {
 public:
  explicit Path(std::shared_ptr<const detail::PathNode> node);

  /// Throws InvalidInput when t is outside [0,1].
  Vector operator()(double t) const;
  void eval_into(double t, Eigen::Ref<Vector> out) const;
  /// Evaluation with ties at joints resolved to the earlier segment.
  Vector eval_left(double t) const;

  Vector front() const { return (*this)(0.0); }
  Vector back() const { return (*this)(1.0); }

  Index dim() const { return node_->dim(); }
  SegmentKind kind() const { return node_->kind(); }
  /// All joint parameters of the tree, mapped to global time, ascending.
  std::vector<double> breakpoints() const;

  const detail::PathNode& node() const { return *node_; }
  const std::shared_ptr<const detail::PathNode>& node_ptr() const { return node_; }

 private:
  std::shared_ptr<const detail::PathNode> node_;
};

Path constant_path(const Vector& x);
/// (1 - s) a + s b.
Path linear_path(const Vector& a, const Vector& b);
/// ((1 - s) a + s b) / |(1 - s) a + s b|; the segment must avoid the origin.
Path normalized_linear_path(const Vector& a, const Vector& b);
/// cos(pi s / 2) from + sin(pi s / 2) to, for orthonormal `from`, `to`.
Path great_arc_path(const Vector& from, const Vector& to);
/// Pointwise p -> ((chi(p) + 2 r lambda(s)) / chi(p)) p where p = inner(s) is
/// read as d x k positions and lambda runs linearly from lambda0 to lambda1.
Path rescale_path(Path inner, Index d, double r, double lambda0, double lambda1);
/// Pointwise right translation q -> q * g in the unit quaternions.
Path group_translate_path(Path inner, const Eigen::Vector4d& g);
/// Rotates the columns of `points` about the origin in the plane of the
/// orthonormal pair (u, w), by angle s * angle (u turns towards w).
Path rigid_rotation_path(const Matrix& points, const Vector& u, const Vector& w, double angle);

/// Concatenation over equal sub-intervals. Adjacent endpoints must agree
/// within kPathTolerance; otherwise ContractViolation.
Path concat(std::vector<Path> parts);
/// Concatenation with explicit interior breakpoints (size parts.size() - 1).
Path concat(std::vector<Path> parts, std::vector<double> breakpoints);
Path path_concat(const Path& a, const Path& b);
/// t -> p(s0 + (s1 - s0) t).
Path reparametrize(const Path& p, double s0, double s1);
Path path_reverse(const Path& p);
/// Componentwise product: the state is the concatenation of factor states.
Path path_product(std::vector<Path> factors);
Path path_product(const Path& a, const Path& b);

}  // namespace tcplan
