#pragma once

// Two-domain planner on odd-dimensional spheres and its k-fold product.
//
// F1 holds antipodal pairs and is routed through the tangent field v(theta1);
// F2 holds everything else and uses the normalized straight segment. On the
// product (S^m)^k a pair is filed under W_l with l the sum of factor tags, so
// labels run k..2k.

#include <tcplan/core/path.hpp>
#include <tcplan/core/types.hpp>
#include <tcplan/tame_planner.hpp>

#include <span>

namespace tcplan {

enum class SphereDomain : int { F1 = 1, F2 = 2 };

/// Threshold on |theta1 + theta2| below which a pair counts as antipodal.
inline constexpr double kAntipodalTolerance = 1e-9;

/// v(x1, y1, ..., xl, yl) = (-y1, x1, ..., -yl, xl). Requires odd m, i.e. even
/// ambient dimension; UnsupportedDimension otherwise.
SpherePoint tangent_field(const SpherePoint& theta);
Vector tangent_field(const Vector& theta);

SphereDomain classify_sphere(const SpherePoint& a, const SpherePoint& b);
Path sphere_section(const SpherePoint& a, const SpherePoint& b);

DomainIndex torus_classify(std::span<const SpherePoint> a, std::span<const SpherePoint> b);
Path torus_section(std::span<const SpherePoint> a, std::span<const SpherePoint> b);

/// Planner on S^m from its ambient dimension m + 1 (must be even).
TamePlanner sphere_planner(Index ambient = 2);
/// Planner on (S^1)^k with labels k..2k.
TamePlanner torus_planner(Index k);
WitnessSet torus_witnesses(Index k);

}  // namespace tcplan
