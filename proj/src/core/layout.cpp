#include <tcplan/core/error.hpp>
#include <tcplan/core/layout.hpp>
#include <tcplan/core/retraction.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace tcplan {

StateLayout StateLayout::spheres(Index ambient, Index count) {
  StateLayout l;
  l.blocks_.push_back({BlockKind::Sphere, 0, ambient, count, 0.0});
  return l;
}

StateLayout StateLayout::projective(Index count) {
  StateLayout l;
  l.blocks_.push_back({BlockKind::Projective, 0, 4, count, 0.0});
  return l;
}

StateLayout StateLayout::positions(Index d, Index k, double radius) {
  StateLayout l;
  l.blocks_.push_back({BlockKind::Positions, 0, d, k, radius});
  return l;
}

StateLayout StateLayout::operator*(const StateLayout& b) const {
  StateLayout out = *this;
  const Index shift = size();
  for (Block blk : b.blocks_) {
    blk.offset += shift;
    out.blocks_.push_back(blk);
  }
  return out;
}

Index StateLayout::size() const {
  Index n = 0;
  for (const auto& b : blocks_) n = std::max(n, b.offset + b.size());
  return n;
}

double state_distance(const StateLayout& layout, const Vector& a, const Vector& b) {
  if (a.size() != layout.size() || b.size() != layout.size())
    throw InvalidInput("state_distance: state size does not match layout");
  double worst = 0.0;
  for (const auto& blk : layout.blocks()) {
    for (Index i = 0; i < blk.count; ++i) {
      const auto x = a.segment(blk.offset + i * blk.width, blk.width);
      const auto y = b.segment(blk.offset + i * blk.width, blk.width);
      const double dist = blk.kind == BlockKind::Projective
                              ? std::min((x - y).norm(), (x + y).norm())
                              : (x - y).norm();
      worst = std::max(worst, dist);
    }
  }
  return worst;
}

double min_clearance(const StateLayout& layout, const Vector& state) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& blk : layout.blocks()) {
    if (blk.kind != BlockKind::Positions) continue;
    Eigen::Map<const Matrix> pts(state.data() + blk.offset, blk.width, blk.count);
    best = std::min(best, 2.0 * chi(pts));
  }
  return best;
}

double unit_norm_drift(const StateLayout& layout, const Vector& state) {
  double worst = 0.0;
  for (const auto& blk : layout.blocks()) {
    if (blk.kind == BlockKind::Positions) continue;
    for (Index i = 0; i < blk.count; ++i)
      worst = std::max(worst, std::abs(state.segment(blk.offset + i * blk.width, blk.width).norm() - 1.0));
  }
  return worst;
}

void renormalize(const StateLayout& layout, Vector& state) {
  for (const auto& blk : layout.blocks()) {
    if (blk.kind == BlockKind::Positions) continue;
    for (Index i = 0; i < blk.count; ++i) state.segment(blk.offset + i * blk.width, blk.width).normalize();
  }
}

}  // namespace tcplan
