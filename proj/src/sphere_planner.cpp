#include <tcplan/core/error.hpp>
#include <tcplan/sphere_planner.hpp>

#include <numeric>
#include <string>

namespace tcplan {

Vector tangent_field(const Vector& theta) {
  if (theta.size() % 2 != 0)
    throw UnsupportedDimension("tangent_field: sphere dimension must be odd");
  Vector v(theta.size());
  for (Index i = 0; i < theta.size(); i += 2) {
    v(i) = -theta(i + 1);
    v(i + 1) = theta(i);
  }
  return v;
}

SpherePoint tangent_field(const SpherePoint& theta) { return SpherePoint(tangent_field(theta.coords())); }

SphereDomain classify_sphere(const SpherePoint& a, const SpherePoint& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InvalidInput("classify_sphere: dimension mismatch");
  return (a.coords() + b.coords()).norm() < kAntipodalTolerance ? SphereDomain::F1 : SphereDomain::F2;
}

Path sphere_section(const SpherePoint& a, const SpherePoint& b) {
  if (classify_sphere(a, b) == SphereDomain::F2) return normalized_linear_path(a.coords(), b.coords());
  const Vector v = tangent_field(a.coords());
  return concat({normalized_linear_path(a.coords(), v), normalized_linear_path(v, b.coords())});
}

DomainIndex torus_classify(std::span<const SpherePoint> a, std::span<const SpherePoint> b) {
  if (a.size() != b.size() || a.empty()) throw InvalidInput("torus_classify: size mismatch");
  DomainIndex idx;
  for (size_t i = 0; i < a.size(); ++i) {
    const int tag = static_cast<int>(classify_sphere(a[i], b[i]));
    idx.ell += tag;
    idx.strata.emplace_back("F[" + std::to_string(i + 1) + "]", tag);
  }
  return idx;
}

Path torus_section(std::span<const SpherePoint> a, std::span<const SpherePoint> b) {
  if (a.size() != b.size() || a.empty()) throw InvalidInput("torus_section: size mismatch");
  std::vector<Path> factors;
  for (size_t i = 0; i < a.size(); ++i) factors.push_back(sphere_section(a[i], b[i]));
  return path_product(std::move(factors));
}

namespace {

std::vector<SpherePoint> split_spheres(const Vector& flat, Index ambient) {
  std::vector<SpherePoint> out;
  for (Index i = 0; i < flat.size(); i += ambient) out.emplace_back(flat.segment(i, ambient));
  return out;
}

}  // namespace

TamePlanner sphere_planner(Index ambient) {
  if (ambient % 2 != 0) throw UnsupportedDimension("sphere_planner: sphere dimension must be odd");
  return TamePlanner(
      "sphere", StateLayout::spheres(ambient, 1), {1, 2}, true,
      [](const Vector& a, const Vector& b) {
        const int tag = static_cast<int>(classify_sphere(SpherePoint(a), SpherePoint(b)));
        return DomainIndex{tag, {{"F", tag}}};
      },
      [](const Vector& a, const Vector& b) { return sphere_section(SpherePoint(a), SpherePoint(b)); });
}

TamePlanner torus_planner(Index k) {
  if (k < 1) throw InvalidInput("torus_planner: k must be >= 1");
  std::vector<int> labels(static_cast<size_t>(k + 1));
  std::iota(labels.begin(), labels.end(), static_cast<int>(k));
  return TamePlanner(
      "torus", StateLayout::spheres(2, k), std::move(labels), true,
      [](const Vector& a, const Vector& b) { return torus_classify(split_spheres(a, 2), split_spheres(b, 2)); },
      [](const Vector& a, const Vector& b) { return torus_section(split_spheres(a, 2), split_spheres(b, 2)); });
}

WitnessSet torus_witnesses(Index k) {
  // Label l needs 2k - l antipodal factors.
  WitnessSet out;
  const Vector e1 = Vector::Unit(2, 0);
  for (Index l = k; l <= 2 * k; ++l) {
    Vector a(2 * k), b(2 * k);
    for (Index i = 0; i < k; ++i) {
      a.segment(2 * i, 2) = e1;
      b.segment(2 * i, 2) = i < 2 * k - l ? Vector(-e1) : e1;
    }
    out.emplace_back(a, b);
  }
  return out;
}

}  // namespace tcplan
