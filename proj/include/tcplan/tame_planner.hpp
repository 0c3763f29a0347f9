#pragma once

// Tame motion planners: a partition of X x X into finitely many labelled
// domains of continuity, with a section that is continuous on each domain.
// Generic combinators transfer a planner along a homotopy domination and form
// products of planners whose cumulative domain unions are closed.

#include <tcplan/core/layout.hpp>
#include <tcplan/core/path.hpp>
#include <tcplan/core/types.hpp>

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace tcplan {

class TamePlanner {
 public:
  using Classifier = std::function<DomainIndex(const Vector&, const Vector&)>;
  using Section = std::function<Path(const Vector&, const Vector&)>;

  /// `labels` must be ascending; their order is the order in which cumulative
  /// unions F_1 u ... u F_i are closed when `cumulative_closed` is set.
  TamePlanner(std::string name, StateLayout layout, std::vector<int> labels, bool cumulative_closed,
              Classifier classify, Section section);

  DomainIndex classify(const Vector& start, const Vector& goal) const;
  Path section(const Vector& start, const Vector& goal) const;

  const std::string& name() const { return name_; }
  const StateLayout& layout() const { return layout_; }
  Index state_dim() const { return layout_.size(); }
  const std::vector<int>& domain_labels() const { return labels_; }
  int domain_count() const { return static_cast<int>(labels_.size()); }
  bool cumulative_closed() const { return cumulative_closed_; }

 private:
  void check_sizes(const Vector& a, const Vector& b) const;

  std::string name_;
  StateLayout layout_;
  std::vector<int> labels_;
  bool cumulative_closed_;
  Classifier classify_;
  Section section_;
};

/// Pairs (start, goal), intended to hit every label of a planner once.
using WitnessSet = std::vector<std::pair<Vector, Vector>>;

/// Y dominated by X: maps f: X -> Y, g: Y -> X and a homotopy H on Y with
/// H_0 = id, H_1 = f o g. `f_along` applies f pointwise to a path of X and
/// `track` returns s -> H_s(y).
struct Domination {
  std::function<Vector(const Vector&)> g;
  std::function<Path(const Path&)> f_along;
  std::function<Path(const Vector&)> track;
  StateLayout target_layout;
};

/// Domains (g x g)^{-1}(U_i); section H-leg, f(section of g-images), reversed
/// H-leg on thirds of [0,1]. The domain count is preserved.
TamePlanner transfer(const TamePlanner& source, const Domination& dom, std::string name);

/// Product planner with n + m - 1 labels: a pair is filed under the sum of the
/// component labels. Throws ContractViolation unless both inputs are
/// cumulative_closed.
TamePlanner product(const TamePlanner& p, const TamePlanner& q);

/// Cartesian product of witness sets, states concatenated.
WitnessSet product_witnesses(const WitnessSet& p, const WitnessSet& q);

/// (S^1)^k x F_r(R^2, k) for d = 2 and (RP^3)^k x F_r(R^3, k) for d = 3.
TamePlanner rigid_planner(int d, int k, double r);
WitnessSet rigid_witnesses(int d, int k, double r);

/// Topological complexity of (SO(d))^k x F_r(R^d, k): 3k - 2 (d = 2), 5k - 1 (d = 3).
int tc_value(int d, int k);

}  // namespace tcplan
