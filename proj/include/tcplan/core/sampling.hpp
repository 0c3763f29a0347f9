#pragma once

// Seeded random states. All randomness in the project flows through
// std::mt19937_64 so that every stochastic check is reproducible from its seed.

#include <tcplan/core/types.hpp>

#include <random>

namespace tcplan {

using Rng = std::mt19937_64;

/// Uniform point of S^{ambient-1}: normalized vector of standard normals.
Vector uniform_sphere(Rng& rng, Index ambient);
ProjectivePoint uniform_projective(Rng& rng);
/// Uniform point of the box [-half_width, half_width]^d repeated k times.
Configuration random_configuration(Rng& rng, Index d, Index k, double half_width = 1.0);
/// Rejection sample with chi > 1.05 r inside a box scaled with k r.
ThickConfiguration random_thick_configuration(Rng& rng, Index d, Index k, double r);
RigidState random_rigid_state(Rng& rng, Index d, Index k, double r);

}  // namespace tcplan
