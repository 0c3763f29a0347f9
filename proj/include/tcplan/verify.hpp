#pragma once

// Runnable checks for planner guarantees: endpoints, clearance, unit norms and
// joint continuity of paths; partition totality; per-domain continuity and
// cross-boundary jumps; closure ordering of domains; domain counts.

#include <tcplan/core/layout.hpp>
#include <tcplan/core/path.hpp>
#include <tcplan/core/sampling.hpp>
#include <tcplan/tame_planner.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace tcplan {

struct Check {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double tolerance = 0.0;
  bool skipped = false;
};

struct VerifyReport {
  std::vector<Check> checks;
  long samples_used = 0;
  std::uint64_t seed = 0;

  void add(std::string name, bool pass, double value, double tolerance);
  void skip(std::string name, double value = 0.0);
  void merge(const VerifyReport& other);
  /// True when every non-skipped check passed.
  bool passed() const;
  int failures() const;

  /// One line per check: "PASS|FAIL|SKIP <name> value=<v> tol=<t>".
  std::string to_text() const;
  std::string to_json() const;
};

/// Endpoint errors, clearance > 2r over positions blocks, unit-norm drift and
/// jumps at every joint of the segment tree.
VerifyReport check_path(const Path& path, const Vector& start, const Vector& goal, const StateLayout& layout,
                        double r, int n_samples);

/// Same checks on a pre-sampled path; samples must include t = 0 and t = 1.
VerifyReport check_samples(const std::vector<std::pair<double, Vector>>& samples, const Vector& start,
                           const Vector& goal, const StateLayout& layout, double r);

struct PartitionReport {
  VerifyReport report;
  std::map<int, long> census;
};

/// Draws n samples; each must satisfy exactly one membership predicate and the
/// classifier must return that predicate's label.
template <typename Sample>
PartitionReport check_partition(const std::function<int(const Sample&)>& classifier,
                                const std::map<int, std::function<bool(const Sample&)>>& membership,
                                const std::function<Sample(Rng&)>& sampler, long n, std::uint64_t seed) {
  PartitionReport out;
  out.report.seed = seed;
  Rng rng(seed);
  long not_exactly_one = 0, disagree = 0;
  for (long s = 0; s < n; ++s) {
    const Sample x = sampler(rng);
    int hits = 0, member = 0;
    for (const auto& [label, pred] : membership) {
      if (pred(x)) {
        ++hits;
        member = label;
      }
    }
    const int label = classifier(x);
    ++out.census[label];
    if (hits != 1) ++not_exactly_one;
    else if (member != label) ++disagree;
  }
  out.report.samples_used = n;
  out.report.add("partition.exactly_one", not_exactly_one == 0, static_cast<double>(not_exactly_one), 0.0);
  out.report.add("partition.classifier_agrees", disagree == 0, static_cast<double>(disagree), 0.0);
  return out;
}

/// Maps (start, goal, delta) to a perturbed pair.
using Perturbation = std::function<std::pair<Vector, Vector>(const Vector&, const Vector&, double)>;

/// Adds delta times a fixed random unit direction to both endpoints and
/// renormalizes the manifold factors.
Perturbation random_perturbation(const StateLayout& layout, Rng& rng);

struct ProbeResult {
  VerifyReport report;
  std::vector<double> sups;  ///< sup over t of state distance, one per delta
  bool escaped = false;      ///< some perturbation left the domain
};

/// Within-domain probe: sup distance between the planned path and the path of
/// each perturbed pair must strictly decrease along `deltas` (given in
/// decreasing order), or stay below 1e-12. Skipped when a perturbation changes
/// the domain index.
ProbeResult continuity_probe(const TamePlanner& planner, const Vector& start, const Vector& goal,
                             const Perturbation& perturb, const std::vector<double>& deltas, int n_t = 100);

/// Cross-boundary probe: the perturbed pairs must leave the domain and the sup
/// distance must stay above `threshold` for every delta.
ProbeResult jump_probe(const TamePlanner& planner, const Vector& start, const Vector& goal,
                       const Perturbation& perturb, const std::vector<double>& deltas, double threshold = 0.1,
                       int n_t = 100);

/// A limit pair and a direction; the sequence is limit + scale * direction.
struct ClosureSample {
  Vector start, goal;
  Vector dir_start, dir_goal;
};

/// For each sample, every sequence element with label i must have a limit
/// with label <= i.
VerifyReport check_cumulative_closure(const TamePlanner& planner,
                                      const std::function<ClosureSample(Rng&)>& sampler, long n,
                                      std::uint64_t seed,
                                      const std::vector<double>& scales = {1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7});

/// Number of distinct labels attained on the witness pairs.
int count_domains(const TamePlanner& planner, const WitnessSet& witnesses);

}  // namespace tcplan
