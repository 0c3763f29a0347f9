#include <tcplan/config_planner.hpp>
#include <tcplan/core/error.hpp>
#include <tcplan/core/retraction.hpp>
#include <tcplan/sphere_planner.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace tcplan {

namespace {

// Groups labels by exact equality of their projection values.
Stratum group_projections(const std::vector<double>& proj) {
  std::vector<Index> order(proj.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return proj[static_cast<size_t>(a)] < proj[static_cast<size_t>(b)]; });
  Stratum s;
  for (Index m : order) {
    const double v = proj[static_cast<size_t>(m)];
    if (s.values.empty() || s.values.back() != v) {
      s.values.push_back(v);
      s.clusters.emplace_back();
    }
    s.clusters.back().push_back(m);
  }
  s.count = static_cast<int>(s.values.size());
  return s;
}

std::vector<double> first_coordinates(const Configuration& c) {
  std::vector<double> p(static_cast<size_t>(c.size()));
  for (Index m = 0; m < c.size(); ++m) p[static_cast<size_t>(m)] = c.points()(0, m);
  return p;
}

// <x_m - x_1, x_2 - x_1> / |x_2 - x_1|: equal numerators stay equal after the
// common division, so ties are decided on exact inner products.
std::vector<double> line_projections(const Configuration& c) {
  const Vector axis = c.point(1) - c.point(0);
  const double len = axis.norm();
  std::vector<double> p(static_cast<size_t>(c.size()));
  for (Index m = 0; m < c.size(); ++m) p[static_cast<size_t>(m)] = (c.point(m) - c.point(0)).dot(axis) / len;
  return p;
}

// Point m (0-based) moves by (m + 1) * delta along u.
Matrix shifted(const Matrix& pts, const Vector& u, double delta) {
  Matrix out = pts;
  for (Index m = 0; m < pts.cols(); ++m) out.col(m) += static_cast<double>(m + 1) * delta * u;
  return out;
}

// Keeps the u-component of each point and puts point m on the lane (m + 1) * lane.
Matrix on_lanes(const Matrix& pts, const Vector& u, const Vector& lane) {
  Matrix out(pts.rows(), pts.cols());
  for (Index m = 0; m < pts.cols(); ++m)
    out.col(m) = pts.col(m).dot(u) * u + static_cast<double>(m + 1) * lane;
  return out;
}

Vector flat(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

std::vector<Path> lane_legs(const Matrix& a, const Matrix& b, const Vector& u, const Vector& lane) {
  const Matrix a_lane = on_lanes(a, u, lane);
  const Matrix b_lane = on_lanes(b, u, lane);
  return {linear_path(flat(a), flat(a_lane)), linear_path(flat(a_lane), flat(b_lane)),
          linear_path(flat(b_lane), flat(b))};
}

void require_same_shape(const Configuration& a, const Configuration& b, const char* what) {
  if (a.dim() != b.dim() || a.size() != b.size())
    throw InvalidInput(std::string(what) + ": configurations differ in d or k");
}

void require_even(Index d, const char* what) {
  if (d % 2 != 0) throw UnsupportedDimension(std::string(what) + ": d must be even");
}

}  // namespace

Stratum stratify(const Configuration& c) { return group_projections(first_coordinates(c)); }

int cp(const Configuration& c) { return stratify(c).count; }

double desingularization_step(const Stratum& s, Index k) {
  double gap = 1.0;
  if (s.values.size() > 1) {
    gap = std::numeric_limits<double>::infinity();
    for (size_t i = 1; i < s.values.size(); ++i) gap = std::min(gap, s.values[i] - s.values[i - 1]);
  }
  return gap / (2.0 * static_cast<double>(k * k));
}

Path desingularize(const Configuration& c) {
  const double delta = desingularization_step(stratify(c), c.size());
  return linear_path(c.flat(), flat(shifted(c.points(), Vector::Unit(c.dim(), 0), delta)));
}

Path generic_connect(const Configuration& a, const Configuration& b) {
  require_same_shape(a, b, "generic_connect");
  if (a.dim() < 2) throw UnsupportedDimension("generic_connect: d must be >= 2");
  if (cp(a) != a.size() || cp(b) != b.size())
    throw ContractViolation("generic_connect: both configurations need pairwise distinct first coordinates");
  return concat(lane_legs(a.points(), b.points(), Vector::Unit(a.dim(), 0), Vector::Unit(a.dim(), 1)));
}

DomainIndex omega_classify(const Configuration& a, const Configuration& b) {
  require_same_shape(a, b, "omega_classify");
  const int i = cp(a), j = cp(b);
  return DomainIndex{i + j, {{"cp_start", i}, {"cp_goal", j}}};
}

Path omega_section(const Configuration& a, const Configuration& b) {
  require_same_shape(a, b, "omega_section");
  if (a.dim() < 2) throw UnsupportedDimension("omega_section: d must be >= 2");
  const Path up = desingularize(a);
  const Path down = desingularize(b);
  const Matrix a1 = Eigen::Map<const Matrix>(up.back().data(), a.dim(), a.size());
  const Matrix b1 = Eigen::Map<const Matrix>(down.back().data(), b.dim(), b.size());
  const Path connect = concat(lane_legs(a1, b1, Vector::Unit(a.dim(), 0), Vector::Unit(a.dim(), 1)));
  return concat({up, connect, path_reverse(down)});
}

Vector direction(const Configuration& c) { return (c.point(1) - c.point(0)).normalized(); }

Stratum stratify_even(const Configuration& c) { return group_projections(line_projections(c)); }

int cpbar(const Configuration& c) { return stratify_even(c).count; }

DirectedStratumPair classify_pair_even(const Configuration& a, const Configuration& b) {
  require_same_shape(a, b, "classify_even");
  require_even(a.dim(), "classify_even");
  DirectedStratumPair p;
  p.e_start = direction(a);
  p.e_goal = direction(b);
  p.kind = (p.e_start + p.e_goal).norm() < kAntipodalTolerance ? PairKind::B : PairKind::A;
  p.i = cpbar(a);
  p.j = cpbar(b);
  return p;
}

DomainIndex classify_even(const Configuration& a, const Configuration& b) {
  const auto p = classify_pair_even(a, b);
  const int ell = p.kind == PairKind::A ? p.i + p.j : p.i + p.j - 1;
  return DomainIndex{ell, {{"cpbar_start", p.i}, {"cpbar_goal", p.j}, {"kind", static_cast<int>(p.kind)}}};
}

Path even_section(const Configuration& a, const Configuration& b) {
  const auto pair = classify_pair_even(a, b);
  const Index k = a.size();
  const Vector& ea = pair.e_start;
  const Vector& u = pair.e_goal;

  Path turn = constant_path(a.flat());
  if (pair.kind == PairKind::B) {
    turn = rigid_rotation_path(a.points(), ea, tangent_field(ea), std::numbers::pi);
  } else {
    const double c = ea.dot(u);
    Vector w = u - c * ea;
    const double n = w.norm();
    if (n > 0.0) turn = rigid_rotation_path(a.points(), ea, w / n, std::atan2(n, c));
  }
  const Vector turned_flat = turn.back();
  const Matrix turned = Eigen::Map<const Matrix>(turned_flat.data(), a.dim(), k);

  // Shift sizes come from the unrotated strata; rotation leaves them unchanged
  // in exact arithmetic but may split exact ties in floating point.
  const Matrix a1 = shifted(turned, u, desingularization_step(stratify_even(a), k));
  const Matrix b1 = shifted(b.points(), u, desingularization_step(stratify_even(b), k));
  const Vector lane = tangent_field(u);

  std::vector<Path> legs{turn, linear_path(turned_flat, flat(a1))};
  for (auto& leg : lane_legs(a1, b1, u, lane)) legs.push_back(std::move(leg));
  legs.push_back(path_reverse(linear_path(b.flat(), flat(b1))));
  return concat(std::move(legs));
}

Path transfer_to_thick(const ConfigSection& thin, const Configuration& a, const Configuration& b, double r) {
  if (!(r > 0.0)) throw InvalidInput("transfer_to_thick: r must be positive");
  if (!(chi(a) > r) || !(chi(b) > r))
    throw ContractViolation("transfer_to_thick: endpoints must lie in F_r (pairwise distance > 2r)");
  const Index d = a.dim();
  return concat({rescale_path(constant_path(a.flat()), d, r, 0.0, 1.0),
                 rescale_path(thin(a, b), d, r, 1.0, 1.0),
                 path_reverse(rescale_path(constant_path(b.flat()), d, r, 0.0, 1.0))});
}

Path transfer_to_thick(const ConfigSection& thin, const ThickConfiguration& a, const ThickConfiguration& b) {
  if (a.radius() != b.radius()) throw InvalidInput("transfer_to_thick: radii differ");
  return transfer_to_thick(thin, a.config(), b.config(), a.radius());
}

namespace {

std::vector<int> label_range(int lo, int hi) {
  std::vector<int> l(static_cast<size_t>(hi - lo + 1));
  std::iota(l.begin(), l.end(), lo);
  return l;
}

void require_shape(Index d, Index k, const char* what) {
  if (d < 2) throw UnsupportedDimension(std::string(what) + ": d must be >= 2");
  if (k < 2) throw InvalidInput(std::string(what) + ": k must be >= 2");
}

}  // namespace

TamePlanner thin_config_planner(Index d, Index k) {
  require_shape(d, k, "thin_config_planner");
  return TamePlanner(
      "config", StateLayout::positions(d, k), label_range(2, static_cast<int>(2 * k)), true,
      [d](const Vector& a, const Vector& b) {
        return omega_classify(Configuration::from_flat(a, d), Configuration::from_flat(b, d));
      },
      [d](const Vector& a, const Vector& b) {
        return omega_section(Configuration::from_flat(a, d), Configuration::from_flat(b, d));
      });
}

TamePlanner even_config_planner(Index d, Index k) {
  require_shape(d, k, "even_config_planner");
  require_even(d, "even_config_planner");
  return TamePlanner(
      "config-even", StateLayout::positions(d, k), label_range(3, static_cast<int>(2 * k)), true,
      [d](const Vector& a, const Vector& b) {
        return classify_even(Configuration::from_flat(a, d), Configuration::from_flat(b, d));
      },
      [d](const Vector& a, const Vector& b) {
        return even_section(Configuration::from_flat(a, d), Configuration::from_flat(b, d));
      });
}

namespace {

TamePlanner thicken(const TamePlanner& thin, const ConfigSection& section, Index d, Index k, double r,
                    std::string name) {
  if (!(r > 0.0)) throw InvalidInput("thick planner: r must be positive");
  return TamePlanner(
      std::move(name), StateLayout::positions(d, k, r), thin.domain_labels(), thin.cumulative_closed(),
      [thin](const Vector& a, const Vector& b) { return thin.classify(a, b); },
      [section, d, r](const Vector& a, const Vector& b) {
        return transfer_to_thick(section, Configuration::from_flat(a, d), Configuration::from_flat(b, d), r);
      });
}

}  // namespace

TamePlanner thick_config_planner(Index d, Index k, double r) {
  return thicken(thin_config_planner(d, k), omega_section, d, k, r, "config-thick");
}

TamePlanner thick_even_planner(Index d, Index k, double r) {
  return thicken(even_config_planner(d, k), even_section, d, k, r, "config-even-thick");
}

namespace {

// Points (m, m) for m < i, (0, m) otherwise: cp = i.
Matrix config_with_cp(Index d, Index k, Index i) {
  Matrix pts = Matrix::Zero(d, k);
  for (Index m = 0; m < k; ++m) {
    pts(0, m) = m < i ? static_cast<double>(m) : 0.0;
    pts(1, m) = static_cast<double>(m);
  }
  return pts;
}

// x_1 = 0, x_2 = e_1, points m < i on the axis, the rest above x_1: cpbar = i.
Matrix config_with_cpbar(Index d, Index k, Index i) {
  Matrix pts = Matrix::Zero(d, k);
  for (Index m = 1; m < k; ++m) {
    if (m < i) {
      pts(0, m) = static_cast<double>(m);
    } else {
      pts(1, m) = static_cast<double>(m);
    }
  }
  return pts;
}

}  // namespace

WitnessSet config_witnesses(Index d, Index k) {
  require_shape(d, k, "config_witnesses");
  WitnessSet out;
  for (Index l = 2; l <= 2 * k; ++l) {
    const Index i = std::max<Index>(1, l - k);
    out.emplace_back(flat(config_with_cp(d, k, i)), flat(config_with_cp(d, k, l - i)));
  }
  return out;
}

WitnessSet even_witnesses(Index d, Index k) {
  require_shape(d, k, "even_witnesses");
  require_even(d, "even_witnesses");
  WitnessSet out;
  // Kind B at l = 3 (cpbar 2, 2, opposite directions); kind A for l >= 4.
  out.emplace_back(flat(config_with_cpbar(d, k, 2)), flat(-config_with_cpbar(d, k, 2)));
  for (Index l = 4; l <= 2 * k; ++l) {
    const Index i = std::max<Index>(2, l - k);
    out.emplace_back(flat(config_with_cpbar(d, k, i)), flat(config_with_cpbar(d, k, l - i)));
  }
  return out;
}

WitnessSet thicken_witnesses(const WitnessSet& thin, Index d, double r) {
  WitnessSet out;
  auto scale = [&](const Vector& v) {
    Eigen::Map<const Matrix> pts(v.data(), d, v.size() / d);
    return Vector(v * (2.0 * r / chi(pts)));
  };
  for (const auto& [a, b] : thin) out.emplace_back(scale(a), scale(b));
  return out;
}

}  // namespace tcplan
