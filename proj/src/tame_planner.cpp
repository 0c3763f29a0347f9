#include <tcplan/config_planner.hpp>
#include <tcplan/core/error.hpp>
#include <tcplan/projective_planner.hpp>
#include <tcplan/sphere_planner.hpp>
#include <tcplan/tame_planner.hpp>

#include <algorithm>
#include <numeric>
#include <string>

namespace tcplan {

TamePlanner::TamePlanner(std::string name, StateLayout layout, std::vector<int> labels, bool cumulative_closed,
                         Classifier classify, Section section)
    : name_(std::move(name)),
      layout_(std::move(layout)),
      labels_(std::move(labels)),
      cumulative_closed_(cumulative_closed),
      classify_(std::move(classify)),
      section_(std::move(section)) {
  if (labels_.empty()) throw InvalidInput("TamePlanner: empty label set");
  if (!std::is_sorted(labels_.begin(), labels_.end()) ||
      std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
    throw InvalidInput("TamePlanner: labels must be strictly ascending");
}

void TamePlanner::check_sizes(const Vector& a, const Vector& b) const {
  if (a.size() != state_dim() || b.size() != state_dim())
    throw InvalidInput(name_ + ": state has " + std::to_string(a.size()) + "/" + std::to_string(b.size()) +
                       " coordinates, expected " + std::to_string(state_dim()));
}

DomainIndex TamePlanner::classify(const Vector& start, const Vector& goal) const {
  check_sizes(start, goal);
  return classify_(start, goal);
}

Path TamePlanner::section(const Vector& start, const Vector& goal) const {
  check_sizes(start, goal);
  return section_(start, goal);
}

TamePlanner transfer(const TamePlanner& source, const Domination& dom, std::string name) {
  auto classify = [source, g = dom.g](const Vector& a, const Vector& b) { return source.classify(g(a), g(b)); };
  auto section = [source, dom](const Vector& a, const Vector& b) {
    return concat({dom.track(a), dom.f_along(source.section(dom.g(a), dom.g(b))), path_reverse(dom.track(b))});
  };
  return TamePlanner(std::move(name), dom.target_layout, source.domain_labels(), source.cumulative_closed(),
                     std::move(classify), std::move(section));
}

TamePlanner product(const TamePlanner& p, const TamePlanner& q) {
  if (!p.cumulative_closed() || !q.cumulative_closed())
    throw ContractViolation("product: both planners must have closed cumulative domain unions (" + p.name() +
                            ", " + q.name() + ")");
  const int lo = p.domain_labels().front() + q.domain_labels().front();
  const int hi = p.domain_labels().back() + q.domain_labels().back();
  std::vector<int> labels(static_cast<size_t>(hi - lo + 1));
  std::iota(labels.begin(), labels.end(), lo);

  const Index np = p.state_dim(), nq = q.state_dim();
  auto classify = [p, q, np, nq](const Vector& a, const Vector& b) {
    DomainIndex left = p.classify(a.head(np), b.head(np));
    const DomainIndex right = q.classify(a.tail(nq), b.tail(nq));
    left.ell += right.ell;
    left.strata.insert(left.strata.end(), right.strata.begin(), right.strata.end());
    return left;
  };
  auto section = [p, q, np, nq](const Vector& a, const Vector& b) {
    return path_product(p.section(a.head(np), b.head(np)), q.section(a.tail(nq), b.tail(nq)));
  };
  return TamePlanner(p.name() + "*" + q.name(), p.layout() * q.layout(), std::move(labels), true,
                     std::move(classify), std::move(section));
}

WitnessSet product_witnesses(const WitnessSet& p, const WitnessSet& q) {
  WitnessSet out;
  for (const auto& [pa, pb] : p) {
    for (const auto& [qa, qb] : q) {
      Vector a(pa.size() + qa.size()), b(pb.size() + qb.size());
      a << pa, qa;
      b << pb, qb;
      out.emplace_back(std::move(a), std::move(b));
    }
  }
  return out;
}

int tc_value(int d, int k) {
  if (k < 2) throw InvalidInput("tc_value: k must be >= 2");
  if (d == 2) return 3 * k - 2;
  if (d == 3) return 5 * k - 1;
  throw UnsupportedDimension("tc_value: d must be 2 or 3");
}

TamePlanner rigid_planner(int d, int k, double r) {
  if (d != 2 && d != 3) throw UnsupportedDimension("rigid_planner: d must be 2 or 3");
  if (k < 2) throw InvalidInput("rigid_planner: k must be >= 2");
  if (!(r > 0.0)) throw InvalidInput("rigid_planner: r must be positive");
  const TamePlanner base = d == 2 ? product(torus_planner(k), thick_even_planner(2, k, r))
                                  : product(rp3_power_planner(k), thick_config_planner(3, k, r));
  auto validate = [d, k, r](const Vector& a, const Vector& b) {
    RigidState::from_flat(a, d, k, r);
    RigidState::from_flat(b, d, k, r);
  };
  return TamePlanner(
      d == 2 ? "rigid-2d" : "rigid-3d", base.layout(), base.domain_labels(), true,
      [base, validate](const Vector& a, const Vector& b) {
        validate(a, b);
        return base.classify(a, b);
      },
      [base, validate](const Vector& a, const Vector& b) {
        validate(a, b);
        return base.section(a, b);
      });
}

WitnessSet rigid_witnesses(int d, int k, double r) {
  if (d == 2) return product_witnesses(torus_witnesses(k), thicken_witnesses(even_witnesses(2, k), 2, r));
  if (d == 3) return product_witnesses(rp3_power_witnesses(k), thicken_witnesses(config_witnesses(3, k), 3, r));
  throw UnsupportedDimension("rigid_witnesses: d must be 2 or 3");
}

}  // namespace tcplan
