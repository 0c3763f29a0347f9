#include <tcplan/core/error.hpp>
#include <tcplan/core/path.hpp>
#include <tcplan/core/quaternion.hpp>
#include <tcplan/core/retraction.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace tcplan {

const char* to_string(SegmentKind kind) {
  switch (kind) {
    case SegmentKind::Linear: return "linear";
    case SegmentKind::NormalizedLinear: return "normalized-linear";
    case SegmentKind::GreatArc: return "great-arc";
    case SegmentKind::ScalarRescale: return "scalar-rescale";
    case SegmentKind::ChartContraction: return "chart-contraction";
    case SegmentKind::GroupTranslate: return "group-translate";
    case SegmentKind::RigidRotation: return "rigid-rotation";
    case SegmentKind::Concatenation: return "concatenation";
    case SegmentKind::Product: return "product";
    case SegmentKind::Reparametrization: return "reparametrization";
  }
  return "unknown";
}

namespace {

double clamp01(double s) { return std::clamp(s, 0.0, 1.0); }

class LinearNode final : public detail::PathNode {
 public:
  LinearNode(Vector a, Vector b) : a_(std::move(a)), b_(std::move(b)), step_(b_ - a_) {}
  // Anchored at the nearer end: exact at both endpoints and in coordinates
  // where a and b agree.
  void eval_into(double s, Side, Eigen::Ref<Vector> out) const override {
    if (s < 0.5) out = a_ + s * step_;
    else out = b_ - (1.0 - s) * step_;
  }
  Index dim() const override { return a_.size(); }
  SegmentKind kind() const override { return SegmentKind::Linear; }

 private:
  Vector a_, b_, step_;
};

class NormalizedLinearNode final : public detail::PathNode {
 public:
  NormalizedLinearNode(Vector a, Vector b) : a_(std::move(a)), b_(std::move(b)) {}
  void eval_into(double s, Side, Eigen::Ref<Vector> out) const override {
    out = (1.0 - s) * a_ + s * b_;
    const double n = out.norm();
    if (!(n > 0.0)) throw ContractViolation("normalized_linear_path: segment meets the origin");
    out /= n;
  }
  Index dim() const override { return a_.size(); }
  SegmentKind kind() const override { return SegmentKind::NormalizedLinear; }

 private:
  Vector a_, b_;
};

class GreatArcNode final : public detail::PathNode {
 public:
  GreatArcNode(Vector from, Vector to) : from_(std::move(from)), to_(std::move(to)) {}
  void eval_into(double s, Side, Eigen::Ref<Vector> out) const override {
    const double angle = std::numbers::pi / 2 * s;
    out = std::cos(angle) * from_ + std::sin(angle) * to_;
  }
  Index dim() const override { return from_.size(); }
  SegmentKind kind() const override { return SegmentKind::GreatArc; }

 private:
  Vector from_, to_;
};

class RescaleNode final : public detail::PathNode {
 public:
  RescaleNode(Path inner, Index d, double r, double l0, double l1)
      : inner_(std::move(inner)), d_(d), r_(r), l0_(l0), l1_(l1) {}
  void eval_into(double s, Side side, Eigen::Ref<Vector> out) const override {
    inner_.node().eval_into(s, side, out);
    Eigen::Map<const Matrix> points(out.data(), d_, out.size() / d_);
    out *= thickening_factor(points, r_, l0_ + (l1_ - l0_) * s);
  }
  Index dim() const override { return inner_.dim(); }
  SegmentKind kind() const override { return SegmentKind::ScalarRescale; }
  std::vector<double> breakpoints() const override { return inner_.node().breakpoints(); }

 private:
  Path inner_;
  Index d_;
  double r_, l0_, l1_;
};

class GroupTranslateNode final : public detail::PathNode {
 public:
  GroupTranslateNode(Path inner, const Eigen::Vector4d& g) : inner_(std::move(inner)), g_(g) {}
  void eval_into(double s, Side side, Eigen::Ref<Vector> out) const override {
    inner_.node().eval_into(s, side, out);
    const Eigen::Vector4d q = out.head<4>();
    out = quat_product(q, g_);
  }
  Index dim() const override { return 4; }
  SegmentKind kind() const override { return SegmentKind::GroupTranslate; }
  std::vector<double> breakpoints() const override { return inner_.node().breakpoints(); }

 private:
  Path inner_;
  Eigen::Vector4d g_;
};

class RigidRotationNode final : public detail::PathNode {
 public:
  RigidRotationNode(Matrix points, Vector u, Vector w, double angle)
      : points_(std::move(points)), u_(std::move(u)), w_(std::move(w)), angle_(angle) {}
  void eval_into(double s, Side, Eigen::Ref<Vector> out) const override {
    const double c = std::cos(s * angle_) - 1.0;
    const double sn = std::sin(s * angle_);
    Eigen::Map<Matrix> dst(out.data(), points_.rows(), points_.cols());
    for (Index m = 0; m < points_.cols(); ++m) {
      const auto x = points_.col(m);
      const double xu = x.dot(u_);
      const double xw = x.dot(w_);
      dst.col(m) = x + c * (xu * u_ + xw * w_) + sn * (xu * w_ - xw * u_);
    }
  }
  Index dim() const override { return points_.size(); }
  SegmentKind kind() const override { return SegmentKind::RigidRotation; }

 private:
  Matrix points_;
  Vector u_, w_;
  double angle_;
};

class ConcatNode final : public detail::PathNode {
 public:
  ConcatNode(std::vector<Path> parts, std::vector<double> knots)
      : parts_(std::move(parts)), knots_(std::move(knots)) {}
  void eval_into(double s, Side side, Eigen::Ref<Vector> out) const override {
    // knots_ = {0, b_1, ..., b_{n-1}, 1}
    const size_t n = parts_.size();
    size_t i;
    if (side == Side::Later) {
      i = static_cast<size_t>(std::upper_bound(knots_.begin() + 1, knots_.end() - 1, s) -
                              (knots_.begin() + 1));
    } else {
      i = static_cast<size_t>(std::lower_bound(knots_.begin() + 1, knots_.end() - 1, s) -
                              (knots_.begin() + 1));
    }
    i = std::min(i, n - 1);
    const double u = clamp01((s - knots_[i]) / (knots_[i + 1] - knots_[i]));
    parts_[i].node().eval_into(u, side, out);
  }
  Index dim() const override { return parts_.front().dim(); }
  SegmentKind kind() const override { return SegmentKind::Concatenation; }
  std::vector<double> breakpoints() const override {
    std::vector<double> out(knots_.begin() + 1, knots_.end() - 1);
    for (size_t i = 0; i < parts_.size(); ++i) {
      const double a = knots_[i], b = knots_[i + 1];
      for (double u : parts_[i].node().breakpoints()) out.push_back(a + (b - a) * u);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<Path> parts_;
  std::vector<double> knots_;
};

class ReparamNode final : public detail::PathNode {
 public:
  ReparamNode(Path inner, double s0, double s1) : inner_(std::move(inner)), s0_(s0), s1_(s1) {}
  void eval_into(double t, Side side, Eigen::Ref<Vector> out) const override {
    const Side inner_side = s1_ < s0_ ? (side == Side::Later ? Side::Earlier : Side::Later) : side;
    inner_.node().eval_into(clamp01(s0_ + (s1_ - s0_) * t), inner_side, out);
  }
  Index dim() const override { return inner_.dim(); }
  SegmentKind kind() const override { return SegmentKind::Reparametrization; }
  std::vector<double> breakpoints() const override {
    std::vector<double> out;
    const double lo = std::min(s0_, s1_), hi = std::max(s0_, s1_);
    for (double u : inner_.node().breakpoints())
      if (u > lo && u < hi) out.push_back((u - s0_) / (s1_ - s0_));
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  Path inner_;
  double s0_, s1_;
};

class ProductNode final : public detail::PathNode {
 public:
  explicit ProductNode(std::vector<Path> factors) : factors_(std::move(factors)) {
    for (const auto& f : factors_) dim_ += f.dim();
  }
  void eval_into(double s, Side side, Eigen::Ref<Vector> out) const override {
    Index offset = 0;
    for (const auto& f : factors_) {
      f.node().eval_into(s, side, out.segment(offset, f.dim()));
      offset += f.dim();
    }
  }
  Index dim() const override { return dim_; }
  SegmentKind kind() const override { return SegmentKind::Product; }
  std::vector<double> breakpoints() const override {
    std::vector<double> out;
    for (const auto& f : factors_) {
      auto b = f.node().breakpoints();
      out.insert(out.end(), b.begin(), b.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  std::vector<Path> factors_;
  Index dim_ = 0;
};

void require_finite(const Vector& v, const char* what) {
  if (!v.allFinite()) throw InvalidInput(std::string(what) + ": non-finite coordinate");
}

}  // namespace

Path::Path(std::shared_ptr<const detail::PathNode> node) : node_(std::move(node)) {
  if (!node_) throw InvalidInput("Path: null node");
}

Vector Path::operator()(double t) const {
  Vector out(dim());
  eval_into(t, out);
  return out;
}

void Path::eval_into(double t, Eigen::Ref<Vector> out) const {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("path_eval: t must lie in [0, 1]");
  node_->eval_into(t, Side::Later, out);
}

Vector Path::eval_left(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("path_eval: t must lie in [0, 1]");
  Vector out(dim());
  node_->eval_into(t, Side::Earlier, out);
  return out;
}

std::vector<double> Path::breakpoints() const {
  auto b = node_->breakpoints();
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return b;
}

Path constant_path(const Vector& x) { return linear_path(x, x); }

Path linear_path(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InvalidInput("linear_path: dimension mismatch");
  require_finite(a, "linear_path");
  require_finite(b, "linear_path");
  return Path(std::make_shared<LinearNode>(a, b));
}

Path normalized_linear_path(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InvalidInput("normalized_linear_path: dimension mismatch");
  require_finite(a, "normalized_linear_path");
  require_finite(b, "normalized_linear_path");
  const Vector ab = b - a;
  const double len2 = ab.squaredNorm();
  const double s = len2 > 0.0 ? std::clamp(-a.dot(ab) / len2, 0.0, 1.0) : 0.0;
  if (!(((1.0 - s) * a + s * b).norm() > 0.0))
    throw ContractViolation("normalized_linear_path: segment meets the origin");
  return Path(std::make_shared<NormalizedLinearNode>(a, b));
}

Path great_arc_path(const Vector& from, const Vector& to) {
  if (from.size() != to.size()) throw InvalidInput("great_arc_path: dimension mismatch");
  if (std::abs(from.dot(to)) > 1e-12) throw InvalidInput("great_arc_path: endpoints not orthogonal");
  return Path(std::make_shared<GreatArcNode>(from, to));
}

Path rescale_path(Path inner, Index d, double r, double lambda0, double lambda1) {
  if (d < 1 || inner.dim() % d != 0) throw InvalidInput("rescale_path: dimension mismatch");
  return Path(std::make_shared<RescaleNode>(std::move(inner), d, r, lambda0, lambda1));
}

Path group_translate_path(Path inner, const Eigen::Vector4d& g) {
  if (inner.dim() != 4) throw InvalidInput("group_translate_path: inner path must be 4-dimensional");
  return Path(std::make_shared<GroupTranslateNode>(std::move(inner), g));
}

Path rigid_rotation_path(const Matrix& points, const Vector& u, const Vector& w, double angle) {
  if (u.size() != points.rows() || w.size() != points.rows())
    throw InvalidInput("rigid_rotation_path: dimension mismatch");
  return Path(std::make_shared<RigidRotationNode>(points, u, w, angle));
}

Path concat(std::vector<Path> parts) {
  const size_t n = parts.size();
  std::vector<double> b;
  for (size_t i = 1; i < n; ++i) b.push_back(static_cast<double>(i) / static_cast<double>(n));
  return concat(std::move(parts), std::move(b));
}

Path concat(std::vector<Path> parts, std::vector<double> breakpoints) {
  if (parts.empty()) throw InvalidInput("concat: no segments");
  if (breakpoints.size() + 1 != parts.size()) throw InvalidInput("concat: breakpoint count");
  if (parts.size() == 1) return parts.front();
  std::vector<double> knots{0.0};
  for (double b : breakpoints) {
    if (!(b > knots.back() && b < 1.0)) throw InvalidInput("concat: breakpoints must increase in (0,1)");
    knots.push_back(b);
  }
  knots.push_back(1.0);
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    if (parts[i].dim() != parts[i + 1].dim()) throw InvalidInput("concat: dimension mismatch");
    const double gap = (parts[i].back() - parts[i + 1].front()).norm();
    if (!(gap <= kPathTolerance))
      throw ContractViolation("concat: segment " + std::to_string(i) +
                              " does not end where the next begins (gap " + std::to_string(gap) + ")");
  }
  return Path(std::make_shared<ConcatNode>(std::move(parts), std::move(knots)));
}

Path path_concat(const Path& a, const Path& b) { return concat({a, b}); }

Path reparametrize(const Path& p, double s0, double s1) {
  if (!(s0 >= 0.0 && s0 <= 1.0 && s1 >= 0.0 && s1 <= 1.0))
    throw InvalidInput("reparametrize: interval must lie in [0, 1]");
  return Path(std::make_shared<ReparamNode>(p, s0, s1));
}

Path path_reverse(const Path& p) { return reparametrize(p, 1.0, 0.0); }

Path path_product(std::vector<Path> factors) {
  if (factors.empty()) throw InvalidInput("path_product: no factors");
  if (factors.size() == 1) return factors.front();
  return Path(std::make_shared<ProductNode>(std::move(factors)));
}

Path path_product(const Path& a, const Path& b) { return path_product(std::vector<Path>{a, b}); }

}  // namespace tcplan
