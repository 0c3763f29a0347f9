#include <tcplan/core/error.hpp>
#include <tcplan/core/retraction.hpp>
#include <tcplan/core/types.hpp>

#include <cmath>
#include <string>

namespace tcplan {

namespace {

void require_unit(double norm, const char* what) {
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > kUnitTolerance)
    throw InvalidInput(std::string(what) + ": representative is not unit length (norm " +
                       std::to_string(norm) + ")");
}

}  // namespace

SpherePoint::SpherePoint(Vector coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw InvalidInput("SpherePoint: ambient dimension must be >= 2");
  require_unit(coords_.norm(), "SpherePoint");
}

SpherePoint SpherePoint::normalized(const Vector& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw InvalidInput("SpherePoint: cannot normalize");
  return SpherePoint(v / n);
}

ProjectivePoint::ProjectivePoint(const Eigen::Vector4d& rep) : rep_(rep) {
  require_unit(rep_.norm(), "ProjectivePoint");
}

ProjectivePoint ProjectivePoint::normalized(const Eigen::Vector4d& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw InvalidInput("ProjectivePoint: cannot normalize");
  return ProjectivePoint(v / n);
}

ProjectivePoint ProjectivePoint::canonical() const {
  for (int i = 0; i < 4; ++i) {
    if (std::abs(rep_(i)) > 1e-12) return rep_(i) > 0 ? *this : -*this;
  }
  return *this;
}

double projective_distance(const Eigen::Vector4d& x, const Eigen::Vector4d& y) {
  return std::min((x - y).norm(), (x + y).norm());
}

double projective_distance(const ProjectivePoint& a, const ProjectivePoint& b) {
  return projective_distance(a.rep(), b.rep());
}

bool projectively_equal(const ProjectivePoint& a, const ProjectivePoint& b, double tol) {
  return projective_distance(a, b) < tol;
}

Configuration::Configuration(Matrix points) : points_(std::move(points)) {
  if (points_.cols() < 2) throw InvalidInput("Configuration: need k >= 2 points");
  if (points_.rows() < 1) throw InvalidInput("Configuration: need d >= 1");
  if (!points_.allFinite()) throw InvalidInput("Configuration: non-finite coordinate");
  for (Index i = 0; i < points_.cols(); ++i)
    for (Index j = i + 1; j < points_.cols(); ++j)
      if (points_.col(i) == points_.col(j))
        throw InvalidInput("Configuration: points " + std::to_string(i) + " and " +
                           std::to_string(j) + " coincide");
}

Configuration Configuration::from_flat(const Vector& flat, Index d) {
  if (d < 1 || flat.size() % d != 0) throw InvalidInput("Configuration: bad flat length");
  return Configuration(Eigen::Map<const Matrix>(flat.data(), d, flat.size() / d));
}

Vector Configuration::flat() const { return Eigen::Map<const Vector>(points_.data(), points_.size()); }

ThickConfiguration::ThickConfiguration(Configuration config, double radius)
    : config_(std::move(config)), radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    throw InvalidInput("ThickConfiguration: radius must be positive");
  if (!(chi(config_.points()) > radius_))
    throw InvalidInput("ThickConfiguration: some pair of points is not separated by more than 2r");
}

RigidState::RigidState(std::vector<Vector> orientations, ThickConfiguration positions)
    : orientations_(std::move(orientations)), positions_(std::move(positions)) {
  const Index d = positions_.config().dim();
  if (d != 2 && d != 3) throw UnsupportedDimension("RigidState: d must be 2 or 3");
  if (static_cast<Index>(orientations_.size()) != positions_.config().size())
    throw InvalidInput("RigidState: orientation and position counts differ");
  for (const auto& q : orientations_) {
    if (q.size() != orientation_dim(d)) throw InvalidInput("RigidState: orientation has wrong size");
    require_unit(q.norm(), "RigidState orientation");
  }
}

Vector RigidState::flat() const {
  const Index od = orientation_dim(dim());
  const Index k = bodies();
  Vector out(k * od + dim() * k);
  for (Index i = 0; i < k; ++i) out.segment(i * od, od) = orientations_[static_cast<size_t>(i)];
  out.tail(dim() * k) = positions_.config().flat();
  return out;
}

RigidState RigidState::from_flat(const Vector& flat, Index d, Index k, double radius) {
  const Index od = orientation_dim(d);
  if (flat.size() != k * (od + d)) throw InvalidInput("RigidState: bad flat length");
  std::vector<Vector> orient;
  orient.reserve(static_cast<size_t>(k));
  for (Index i = 0; i < k; ++i) orient.emplace_back(flat.segment(i * od, od));
  return RigidState(std::move(orient),
                    ThickConfiguration(Configuration::from_flat(flat.tail(d * k), d), radius));
}

ThickConfiguration rho(const Configuration& c, double r) {
  if (!(r > 0.0)) throw InvalidInput("rho: r must be positive");
  return ThickConfiguration(Configuration(thickening_factor(c.points(), r, 1.0) * c.points()), r);
}

ThickConfiguration hat_homotopy(const ThickConfiguration& c, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("hat_homotopy: t must lie in [0, 1]");
  return ThickConfiguration(
      Configuration(thickening_factor(c.points(), c.radius(), t) * c.points()), c.radius());
}

}  // namespace tcplan
