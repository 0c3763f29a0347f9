#include <tcplan/core/error.hpp>
#include <tcplan/core/retraction.hpp>
#include <tcplan/core/sampling.hpp>

namespace tcplan {

Vector uniform_sphere(Rng& rng, Index ambient) {
  std::normal_distribution<double> normal;
  Vector v(ambient);
  do {
    for (Index i = 0; i < ambient; ++i) v(i) = normal(rng);
  } while (v.norm() < 1e-6);
  return v.normalized();
}

ProjectivePoint uniform_projective(Rng& rng) {
  return ProjectivePoint::normalized(Eigen::Vector4d(uniform_sphere(rng, 4)));
}

namespace {

Matrix box_sample(Rng& rng, Index d, Index k, double half_width) {
  std::uniform_real_distribution<double> uni(-half_width, half_width);
  Matrix pts(d, k);
  for (Index j = 0; j < k; ++j)
    for (Index i = 0; i < d; ++i) pts(i, j) = uni(rng);
  return pts;
}

}  // namespace

Configuration random_configuration(Rng& rng, Index d, Index k, double half_width) {
  for (;;) {
    Matrix pts = box_sample(rng, d, k, half_width);
    if (chi(pts) > 0.0) return Configuration(std::move(pts));
  }
}

ThickConfiguration random_thick_configuration(Rng& rng, Index d, Index k, double r) {
  if (!(r > 0.0)) throw InvalidInput("random_thick_configuration: r must be positive");
  const double half_width = 2.0 * r * static_cast<double>(k);
  for (;;) {
    Matrix pts = box_sample(rng, d, k, half_width);
    if (chi(pts) > 1.05 * r) return ThickConfiguration(Configuration(std::move(pts)), r);
  }
}

RigidState random_rigid_state(Rng& rng, Index d, Index k, double r) {
  if (d != 2 && d != 3) throw UnsupportedDimension("random_rigid_state: d must be 2 or 3");
  std::vector<Vector> orient;
  for (Index i = 0; i < k; ++i) {
    if (d == 2) {
      orient.push_back(uniform_sphere(rng, 2));
    } else {
      orient.push_back(uniform_projective(rng).canonical().rep());
    }
  }
  return RigidState(std::move(orient), random_thick_configuration(rng, d, k, r));
}

}  // namespace tcplan
