#include <tcplan/core/error.hpp>
#include <tcplan/verify.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

namespace tcplan {

void VerifyReport::add(std::string name, bool pass, double value, double tolerance) {
  checks.push_back({std::move(name), pass, value, tolerance, false});
}

void VerifyReport::skip(std::string name, double value) {
  checks.push_back({std::move(name), false, value, 0.0, true});
}

void VerifyReport::merge(const VerifyReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  samples_used += other.samples_used;
}

bool VerifyReport::passed() const { return failures() == 0; }

int VerifyReport::failures() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.skipped && !c.pass; }));
}

std::string VerifyReport::to_text() const {
  std::ostringstream os;
  os.precision(6);
  for (const auto& c : checks)
    os << (c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL") << ' ' << c.name << " value=" << c.value
       << " tol=" << c.tolerance << '\n';
  return os.str();
}

std::string VerifyReport::to_json() const {
  nlohmann::json j;
  j["seed"] = seed;
  j["samples_used"] = samples_used;
  j["passed"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e{{"name", c.name}, {"pass", c.pass}, {"tolerance", c.tolerance}, {"skipped", c.skipped}};
    e["value"] = std::isfinite(c.value) ? nlohmann::json(c.value) : nlohmann::json(nullptr);
    j["checks"].push_back(std::move(e));
  }
  return j.dump();
}

namespace {

struct SampleStats {
  double clearance = std::numeric_limits<double>::infinity();
  double drift = 0.0;
};

void accumulate(SampleStats& s, const StateLayout& layout, const Vector& state) {
  s.clearance = std::min(s.clearance, min_clearance(layout, state));
  s.drift = std::max(s.drift, unit_norm_drift(layout, state));
}

void add_common(VerifyReport& rep, const SampleStats& stats, double start_err, double goal_err, double r) {
  rep.add("endpoint.start", start_err < kPathTolerance, start_err, kPathTolerance);
  rep.add("endpoint.goal", goal_err < kPathTolerance, goal_err, kPathTolerance);
  rep.add("clearance", stats.clearance > 2.0 * r, stats.clearance, 2.0 * r);
  rep.add("unit_norm_drift", stats.drift < kPathTolerance, stats.drift, kPathTolerance);
}

}  // namespace

VerifyReport check_path(const Path& path, const Vector& start, const Vector& goal, const StateLayout& layout,
                        double r, int n_samples) {
  if (n_samples < 2) throw InvalidInput("check_path: need at least two samples");
  if (path.dim() != layout.size()) throw InvalidInput("check_path: path dimension does not match layout");
  VerifyReport rep;
  SampleStats stats;
  Vector state(path.dim());
  for (int i = 0; i < n_samples; ++i) {
    path.eval_into(static_cast<double>(i) / (n_samples - 1), state);
    accumulate(stats, layout, state);
  }
  double jump = 0.0;
  for (double t : path.breakpoints()) jump = std::max(jump, state_distance(layout, path.eval_left(t), path(t)));
  add_common(rep, stats, state_distance(layout, path(0.0), start), state_distance(layout, path(1.0), goal), r);
  rep.add("joint_jump", jump < kPathTolerance, jump, kPathTolerance);
  rep.samples_used = n_samples;
  return rep;
}

VerifyReport check_samples(const std::vector<std::pair<double, Vector>>& samples, const Vector& start,
                           const Vector& goal, const StateLayout& layout, double r) {
  if (samples.size() < 2) throw InvalidInput("check_samples: need at least two samples");
  if (samples.front().first != 0.0 || samples.back().first != 1.0)
    throw InvalidInput("check_samples: samples must start at t = 0 and end at t = 1");
  VerifyReport rep;
  SampleStats stats;
  double prev_t = -1.0;
  bool ordered = true;
  for (const auto& [t, state] : samples) {
    if (state.size() != layout.size()) throw InvalidInput("check_samples: state size does not match layout");
    ordered = ordered && t > prev_t;
    prev_t = t;
    accumulate(stats, layout, state);
  }
  add_common(rep, stats, state_distance(layout, samples.front().second, start),
             state_distance(layout, samples.back().second, goal), r);
  rep.add("time_ordered", ordered, ordered ? 1.0 : 0.0, 1.0);
  rep.samples_used = static_cast<long>(samples.size());
  return rep;
}

Perturbation random_perturbation(const StateLayout& layout, Rng& rng) {
  const Vector da = uniform_sphere(rng, layout.size());
  const Vector db = uniform_sphere(rng, layout.size());
  return [layout, da, db](const Vector& a, const Vector& b, double delta) {
    Vector pa = a + delta * da, pb = b + delta * db;
    renormalize(layout, pa);
    renormalize(layout, pb);
    return std::pair{pa, pb};
  };
}

namespace {

double sup_distance(const StateLayout& layout, const Path& p, const Path& q, int n_t) {
  double sup = 0.0;
  Vector x(p.dim()), y(q.dim());
  for (int i = 0; i <= n_t; ++i) {
    const double t = static_cast<double>(i) / n_t;
    p.eval_into(t, x);
    q.eval_into(t, y);
    sup = std::max(sup, state_distance(layout, x, y));
  }
  return sup;
}

// Leaving the domain includes landing on a pair the planner rejects (e.g. a
// thick configuration losing its clearance).
bool same_domain(const TamePlanner& planner, const DomainIndex& base, const Vector& a, const Vector& b) {
  try {
    return planner.classify(a, b) == base;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

ProbeResult continuity_probe(const TamePlanner& planner, const Vector& start, const Vector& goal,
                             const Perturbation& perturb, const std::vector<double>& deltas, int n_t) {
  ProbeResult res;
  const DomainIndex base = planner.classify(start, goal);
  const Path reference = planner.section(start, goal);
  for (double delta : deltas) {
    auto [a, b] = perturb(start, goal, delta);
    if (!same_domain(planner, base, a, b)) {
      res.escaped = true;
      res.report.skip(planner.name() + ".continuity.domain_escape", delta);
      return res;
    }
    res.sups.push_back(sup_distance(planner.layout(), reference, planner.section(a, b), n_t));
  }
  bool monotone = true;
  // Sups already at rounding level (e.g. a constant section) count as decreasing.
  constexpr double floor = 1e-12;
  for (size_t i = 1; i < res.sups.size(); ++i)
    monotone = monotone && (res.sups[i] < res.sups[i - 1] || (res.sups[i] <= floor && res.sups[i - 1] <= floor));
  res.report.add(planner.name() + ".continuity.monotone", monotone, res.sups.empty() ? 0.0 : res.sups.back(),
                 res.sups.empty() ? 0.0 : res.sups.front());
  res.report.samples_used = static_cast<long>(deltas.size()) * (n_t + 1);
  return res;
}

ProbeResult jump_probe(const TamePlanner& planner, const Vector& start, const Vector& goal,
                       const Perturbation& perturb, const std::vector<double>& deltas, double threshold, int n_t) {
  ProbeResult res;
  const DomainIndex base = planner.classify(start, goal);
  const Path reference = planner.section(start, goal);
  double smallest = std::numeric_limits<double>::infinity();
  bool crossed = true;
  for (double delta : deltas) {
    auto [a, b] = perturb(start, goal, delta);
    crossed = crossed && !same_domain(planner, base, a, b);
    const double sup = sup_distance(planner.layout(), reference, planner.section(a, b), n_t);
    res.sups.push_back(sup);
    smallest = std::min(smallest, sup);
  }
  res.escaped = crossed;
  res.report.add(planner.name() + ".jump.crosses_boundary", crossed, crossed ? 1.0 : 0.0, 1.0);
  res.report.add(planner.name() + ".jump.persistent", smallest > threshold, smallest, threshold);
  res.report.samples_used = static_cast<long>(deltas.size()) * (n_t + 1);
  return res;
}

VerifyReport check_cumulative_closure(const TamePlanner& planner,
                                      const std::function<ClosureSample(Rng&)>& sampler, long n,
                                      std::uint64_t seed, const std::vector<double>& scales) {
  VerifyReport rep;
  rep.seed = seed;
  Rng rng(seed);
  long violations = 0, sequences = 0;
  for (long s = 0; s < n; ++s) {
    const ClosureSample cs = sampler(rng);
    const int limit = planner.classify(cs.start, cs.goal).ell;
    for (double scale : scales) {
      Vector a = cs.start + scale * cs.dir_start, b = cs.goal + scale * cs.dir_goal;
      renormalize(planner.layout(), a);
      renormalize(planner.layout(), b);
      ++sequences;
      if (planner.classify(a, b).ell < limit) ++violations;
    }
  }
  rep.samples_used = sequences;
  rep.add(planner.name() + ".cumulative_closure", violations == 0, static_cast<double>(violations), 0.0);
  return rep;
}

int count_domains(const TamePlanner& planner, const WitnessSet& witnesses) {
  std::set<int> labels;
  for (const auto& [a, b] : witnesses) labels.insert(planner.classify(a, b).ell);
  return static_cast<int>(labels.size());
}

}  // namespace tcplan
