#include <tcplan/core/error.hpp>
#include <tcplan/core/quaternion.hpp>
#include <tcplan/projective_planner.hpp>

#include <cmath>
#include <numeric>
#include <string>

namespace tcplan {

namespace {

void require_chart(int chart) {
  if (chart < 1 || chart > 4) throw InvalidInput("chart index must be in 1..4");
}

Eigen::Vector4d insert_one(int chart, const Eigen::Vector3d& y) {
  Eigen::Vector4d v;
  for (int j = 0, src = 0; j < 4; ++j) v(j) = (j == chart - 1) ? 1.0 : y(src++);
  return v;
}

class ContractionNode final : public detail::PathNode {
 public:
  ContractionNode(int chart, const Eigen::Vector3d& y) : chart_(chart), y_(y) {}
  void eval_into(double s, Side, Eigen::Ref<Vector> out) const override {
    const Eigen::Vector4d v = insert_one(chart_, (1.0 - s) * y_);
    out = v / v.norm();
  }
  Index dim() const override { return 4; }
  SegmentKind kind() const override { return SegmentKind::ChartContraction; }

 private:
  int chart_;
  Eigen::Vector3d y_;
};

}  // namespace

Eigen::Vector3d chart_phi(int chart, const ProjectivePoint& x) {
  require_chart(chart);
  const auto& v = x.rep();
  const double pivot = v(chart - 1);
  if (std::abs(pivot) <= 1e-12)
    throw ChartDomainError("chart_phi: point lies outside U_" + std::to_string(chart));
  Eigen::Vector3d y;
  for (int j = 0, dst = 0; j < 4; ++j)
    if (j != chart - 1) y(dst++) = v(j) / pivot;
  return y;
}

ProjectivePoint chart_psi(int chart, const Eigen::Vector3d& y) {
  require_chart(chart);
  return ProjectivePoint::normalized(insert_one(chart, y));
}

double chart_weight(int chart, const ProjectivePoint& x) {
  require_chart(chart);
  const double c = x.rep()(chart - 1);
  return c * c;
}

double v_threshold(int j, int d) { return 2.0 * j / static_cast<double>((d + 1) * (d + 2)); }

int classify_V(const ProjectivePoint& x) {
  // The first index reaching its threshold also has every earlier weight
  // below threshold. Thresholds sum to 1 = sum of weights, so some index
  // reaches it; 4 covers rounding at the very edge.
  for (int i = 1; i <= 4; ++i)
    if (chart_weight(i, x) >= v_threshold(i)) return i;
  return 4;
}

ProjectivePoint contraction_H(int chart, const ProjectivePoint& z, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("contraction_H: t must lie in [0, 1]");
  return chart_psi(chart, (1.0 - t) * chart_phi(chart, z));
}

Path contraction_path(int chart, const ProjectivePoint& z) {
  return Path(std::make_shared<ContractionNode>(chart, chart_phi(chart, z)));
}

int classify_E(const ProjectivePoint& x, const ProjectivePoint& y) {
  return classify_V(quat_mul(x, quat_inv(y)));
}

Path rp3_section(const ProjectivePoint& x, const ProjectivePoint& y) {
  const ProjectivePoint z = quat_mul(x, quat_inv(y));
  const int i = classify_V(z);
  Path contract = group_translate_path(contraction_path(i, z), y.rep());
  Path correct = i == 1 ? constant_path(y.rep())
                        : group_translate_path(great_arc_path(Vector::Unit(4, i - 1), Vector::Unit(4, 0)), y.rep());
  return concat({std::move(contract), std::move(correct)});
}

DomainIndex rp3_product_classify(std::span<const ProjectivePoint> x, std::span<const ProjectivePoint> y) {
  if (x.size() != y.size() || x.empty()) throw InvalidInput("rp3_product_classify: size mismatch");
  DomainIndex idx;
  for (size_t i = 0; i < x.size(); ++i) {
    const int e = classify_E(x[i], y[i]);
    idx.ell += e;
    idx.strata.emplace_back("E[" + std::to_string(i + 1) + "]", e);
  }
  return idx;
}

Path rp3_product_section(std::span<const ProjectivePoint> x, std::span<const ProjectivePoint> y) {
  if (x.size() != y.size() || x.empty()) throw InvalidInput("rp3_product_section: size mismatch");
  std::vector<Path> factors;
  for (size_t i = 0; i < x.size(); ++i) factors.push_back(rp3_section(x[i], y[i]));
  return path_product(std::move(factors));
}

namespace {

std::vector<ProjectivePoint> split_quaternions(const Vector& flat) {
  std::vector<ProjectivePoint> out;
  for (Index i = 0; i < flat.size(); i += 4) out.emplace_back(Eigen::Vector4d(flat.segment<4>(i)));
  return out;
}

}  // namespace

TamePlanner rp3_planner() { return rp3_power_planner(1); }

TamePlanner rp3_power_planner(Index k) {
  if (k < 1) throw InvalidInput("rp3_power_planner: k must be >= 1");
  std::vector<int> labels(static_cast<size_t>(3 * k + 1));
  std::iota(labels.begin(), labels.end(), static_cast<int>(k));
  return TamePlanner(
      k == 1 ? "rp3" : "rp3-power", StateLayout::projective(k), std::move(labels), true,
      [](const Vector& a, const Vector& b) {
        return rp3_product_classify(split_quaternions(a), split_quaternions(b));
      },
      [](const Vector& a, const Vector& b) {
        return rp3_product_section(split_quaternions(a), split_quaternions(b));
      });
}

WitnessSet rp3_power_witnesses(Index k) {
  // ([e_i], [1]) lies in E_i; fill factor indices greedily up to 4.
  WitnessSet out;
  for (Index l = k; l <= 4 * k; ++l) {
    Vector a(4 * k), b(4 * k);
    Index extra = l - k;
    for (Index f = 0; f < k; ++f) {
      const Index add = std::min<Index>(3, extra);
      extra -= add;
      a.segment<4>(4 * f) = Eigen::Vector4d::Unit(add);
      b.segment<4>(4 * f) = Eigen::Vector4d::Unit(0);
    }
    out.emplace_back(a, b);
  }
  return out;
}

}  // namespace tcplan
