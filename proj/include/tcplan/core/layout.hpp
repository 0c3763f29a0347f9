#pragma once

// Describes how a flat state vector splits into manifold factors, so that
// generic code (products, verification) can measure and check states.

#include <tcplan/core/types.hpp>

#include <vector>

namespace tcplan {

enum class BlockKind {
  Sphere,      ///< unit vectors in R^width, one per body
  Projective,  ///< unit quaternions up to sign, one per body
  Positions,   ///< d x k column-major positions
};

struct Block {
  BlockKind kind;
  Index offset = 0;
  Index width = 0;   ///< ambient size of one factor (sphere/projective) or d (positions)
  Index count = 1;   ///< number of factors (bodies)
  double radius = 0; ///< thickness for positions blocks; 0 means thin F(R^d, k)

  Index size() const { return width * count; }
};

class StateLayout {
 public:
  StateLayout() = default;
  static StateLayout spheres(Index ambient, Index count);
  static StateLayout projective(Index count);
  static StateLayout positions(Index d, Index k, double radius = 0.0);

  /// Concatenation, offsets of `b` shifted past this layout.
  StateLayout operator*(const StateLayout& b) const;

  const std::vector<Block>& blocks() const { return blocks_; }
  Index size() const;

 private:
  std::vector<Block> blocks_;
};

/// Sup over factors of spherical chord / projective / per-point Euclidean distances.
double state_distance(const StateLayout& layout, const Vector& a, const Vector& b);

/// Smallest pairwise distance over all positions blocks (+inf if none).
double min_clearance(const StateLayout& layout, const Vector& state);

/// Largest | |q| - 1 | over sphere and projective factors (0 if none).
double unit_norm_drift(const StateLayout& layout, const Vector& state);

/// Projects sphere and projective factors back to unit length.
void renormalize(const StateLayout& layout, Vector& state);

}  // namespace tcplan
