#include <tcplan/cli/commands.hpp>
#include <tcplan/cli/instance.hpp>
#include <tcplan/core/sampling.hpp>
#include <tcplan/tame_planner.hpp>
#include <tcplan/verify.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <thread>

namespace tcplan::cli {

using nlohmann::json;

namespace {

std::vector<std::pair<std::string, int>> sorted(std::vector<std::pair<std::string, int>> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

int cmd_plan(const std::string& input, int samples, const std::string& output, std::ostream& err) {
  if (samples < 1) {
    err << "plan: --samples must be >= 1\n";
    return kUsageError;
  }
  try {
    const Instance inst = load_instance(input);
    const TamePlanner planner = rigid_planner(inst.d, inst.k, inst.r);
    SampledPath sp;
    sp.domain = planner.classify(inst.start, inst.goal);
    const Path path = planner.section(inst.start, inst.goal);
    for (int i = 0; i <= samples; ++i) {
      const double t = static_cast<double>(i) / samples;
      sp.samples.emplace_back(t, path(t));
    }
    write_text_file(output, path_to_json(sp, inst.d, inst.k).dump() + "\n");
    return kSuccess;
  } catch (const std::exception& e) {
    err << "plan: " << e.what() << '\n';
    return kUsageError;
  }
}

int cmd_verify(const std::string& input, const std::string& path_file, std::ostream& out, std::ostream& err) {
  Instance inst;
  SampledPath sp;
  try {
    inst = load_instance(input);
    sp = parse_path(read_json_file(path_file), inst.d, inst.k);
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << '\n';
    return kUsageError;
  }
  const TamePlanner planner = rigid_planner(inst.d, inst.k, inst.r);
  VerifyReport rep;
  try {
    rep = check_samples(sp.samples, inst.start, inst.goal, planner.layout(), inst.r);
  } catch (const std::exception& e) {
    err << "verify: " << e.what() << '\n';
    return kUsageError;
  }
  const DomainIndex expected = planner.classify(inst.start, inst.goal);
  const bool same = expected.ell == sp.domain.ell && sorted(expected.strata) == sorted(sp.domain.strata);
  rep.add("domain_matches", same, sp.domain.ell, expected.ell);
  out << rep.to_text();
  return rep.passed() ? kSuccess : kVerificationFailed;
}

int cmd_domains(const std::string& input, std::ostream& out, std::ostream& err) {
  try {
    const Instance inst = load_instance(input);
    const DomainIndex idx = rigid_planner(inst.d, inst.k, inst.r).classify(inst.start, inst.goal);
    json strata = json::object();
    for (const auto& [name, value] : idx.strata) strata[name] = value;
    out << json{{"domain", idx.ell}, {"strata", strata}}.dump() << '\n';
    return kSuccess;
  } catch (const std::exception& e) {
    err << "domains: " << e.what() << '\n';
    return kUsageError;
  }
}

int cmd_tc(int d, int k, std::ostream& out, std::ostream& err) {
  try {
    out << tc_value(d, k) << '\n';
    return kSuccess;
  } catch (const std::exception& e) {
    err << "tc: " << e.what() << '\n';
    return kUsageError;
  }
}

namespace {

struct TrialRow {
  int domain = 0;
  double min_clearance = 0.0;
  double path_length = 0.0;
  double wall_ms = 0.0;
};

TrialRow run_trial(const TamePlanner& planner, const BenchOptions& opt, int trial) {
  // Each trial owns its generator so results do not depend on scheduling.
  std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  Rng rng(seq);
  const Vector a = random_rigid_state(rng, opt.d, opt.k, opt.r).flat();
  const Vector b = random_rigid_state(rng, opt.d, opt.k, opt.r).flat();

  const auto t0 = std::chrono::steady_clock::now();
  TrialRow row;
  row.domain = planner.classify(a, b).ell;
  const Path path = planner.section(a, b);
  Vector prev = path(0.0), cur(path.dim());
  row.min_clearance = min_clearance(planner.layout(), prev);
  for (int i = 1; i <= opt.samples; ++i) {
    path.eval_into(static_cast<double>(i) / opt.samples, cur);
    row.min_clearance = std::min(row.min_clearance, min_clearance(planner.layout(), cur));
    row.path_length += state_distance(planner.layout(), prev, cur);
    prev.swap(cur);
  }
  if (opt.timing)
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

std::string format_row(int trial, const TrialRow& row) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d,%d,%.12g,%.12g,%.3f\n", trial, row.domain, row.min_clearance,
                row.path_length, row.wall_ms);
  return buf;
}

}  // namespace

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.trials < 1 || opt.samples < 1 || opt.threads < 1) {
    err << "bench: --trials, --samples and --threads must be >= 1\n";
    return kUsageError;
  }
  try {
    const TamePlanner planner = rigid_planner(opt.d, opt.k, opt.r);
    std::vector<TrialRow> rows(static_cast<size_t>(opt.trials));
    {
      std::vector<std::jthread> pool;
      for (int w = 0; w < opt.threads; ++w) {
        pool.emplace_back([&, w] {
          for (int t = w; t < opt.trials; t += opt.threads) rows[static_cast<size_t>(t)] = run_trial(planner, opt, t);
        });
      }
    }
    std::string csv = std::string(kBenchHeader) + "\n";
    int failures = 0;
    double total_len = 0.0, total_ms = 0.0;
    std::set<int> domains;
    for (int t = 0; t < opt.trials; ++t) {
      const TrialRow& row = rows[static_cast<size_t>(t)];
      csv += format_row(t, row);
      failures += row.min_clearance > 2.0 * opt.r ? 0 : 1;
      total_len += row.path_length;
      total_ms += row.wall_ms;
      domains.insert(row.domain);
    }
    if (!opt.csv.empty()) write_text_file(opt.csv, csv);
    out << "trials=" << opt.trials << " clearance_failures=" << failures
        << " distinct_domains=" << domains.size() << " mean_path_length=" << total_len / opt.trials;
    if (opt.timing) out << " total_wall_ms=" << total_ms;
    out << '\n';
    return failures == 0 ? kSuccess : kVerificationFailed;
  } catch (const std::exception& e) {
    err << "bench: " << e.what() << '\n';
    return kUsageError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Collision-free motion planner for k rigid bodies in R^2 and R^3", "tcplan"};
  app.require_subcommand(1);

  std::string input, output, path_file;
  int samples = 100;
  auto* plan = app.add_subcommand("plan", "Plan a path and write sampled states as JSON");
  plan->add_option("--input", input, "Instance JSON")->required();
  plan->add_option("--samples", samples, "Number of uniform steps (writes N+1 samples)")->required();
  plan->add_option("--output", output, "Output path JSON")->required();

  auto* verify = app.add_subcommand("verify", "Check a stored path against its instance");
  verify->add_option("--input", input, "Instance JSON")->required();
  verify->add_option("--path", path_file, "Path JSON written by plan")->required();

  auto* domains = app.add_subcommand("domains", "Print the domain of continuity of an instance");
  domains->add_option("--input", input, "Instance JSON")->required();

  int d = 2, k = 2;
  auto* tc = app.add_subcommand("tc", "Print the topological complexity of the rigid-body state space");
  tc->add_option("--d", d, "Dimension (2 or 3)")->required();
  tc->add_option("--k", k, "Number of bodies (>= 2)")->required();

  BenchOptions bench_opt;
  auto* bench = app.add_subcommand("bench", "Plan random instances and write per-trial CSV rows");
  bench->add_option("--d", bench_opt.d, "Dimension (2 or 3)")->required();
  bench->add_option("--k", bench_opt.k, "Number of bodies (>= 2)")->required();
  bench->add_option("--r", bench_opt.r, "Body radius")->required();
  bench->add_option("--trials", bench_opt.trials, "Number of random instances")->required();
  bench->add_option("--seed", bench_opt.seed, "Seed of the mt19937_64 generator")->required();
  bench->add_option("--csv", bench_opt.csv, "CSV output file")->required();
  bench->add_option("--samples", bench_opt.samples, "Samples per path")->capture_default_str();
  bench->add_option("--threads", bench_opt.threads, "Worker threads")->capture_default_str();
  bench->add_flag("--timing", bench_opt.timing, "Record wall time per trial");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kUsageError;
  }

  if (*plan) return cmd_plan(input, samples, output, err);
  if (*verify) return cmd_verify(input, path_file, out, err);
  if (*domains) return cmd_domains(input, out, err);
  if (*tc) return cmd_tc(d, k, out, err);
  return cmd_bench(bench_opt, out, err);
}

}  // namespace tcplan::cli
