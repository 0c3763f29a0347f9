// Acceptance run: one PASS/FAIL line per criterion, tolerances fixed below.

#include "oracles.hpp"

#include <tcplan/cli/commands.hpp>
#include <tcplan/cli/instance.hpp>
#include <tcplan/config_planner.hpp>
#include <tcplan/core/quaternion.hpp>
#include <tcplan/core/retraction.hpp>
#include <tcplan/core/sampling.hpp>
#include <tcplan/projective_planner.hpp>
#include <tcplan/sphere_planner.hpp>
#include <tcplan/tame_planner.hpp>
#include <tcplan/verify.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

using namespace tcplan;
namespace fs = std::filesystem;

namespace {

constexpr double kEndpointTol = 1e-9;
constexpr double kIdentityTol = 1e-12;
constexpr double kJumpThreshold = 0.1;
constexpr double kCountTimeLimit = 10.0;
constexpr double kCollisionTimeLimit = 60.0;
const std::vector<double> kDeltas{1e-3, 1e-4, 1e-5};

int g_failed = 0;

void report(int id, const std::string& what, bool pass, const std::string& detail) {
  std::cout << (pass ? "PASS" : "FAIL") << " [" << id << "] " << what << ": " << detail << std::endl;
  if (!pass) ++g_failed;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

oracle::Points to_points(const Matrix& m) {
  oracle::Points p(static_cast<size_t>(m.cols()));
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) p[static_cast<size_t>(j)].push_back(m(i, j));
  return p;
}

// ---------------------------------------------------------------------------

void domain_counts() {
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream detail;
  bool ok = true;
  for (int d : {2, 3}) {
    for (int k = 2; k <= (d == 2 ? 5 : 4); ++k) {
      const int n = count_domains(rigid_planner(d, k, 1.0), rigid_witnesses(d, k, 1.0));
      ok = ok && n == tc_value(d, k);
      detail << "d=" << d << ",k=" << k << ":" << n << "/" << tc_value(d, k) << " ";
    }
  }
  const double secs = seconds_since(t0);
  detail << "time=" << secs << "s (limit " << kCountTimeLimit << "s)";
  report(1, "domain counts equal 3k-2 / 5k-1", ok && secs < kCountTimeLimit, detail.str());
}

void sub_planner_counts() {
  std::ostringstream detail;
  bool ok = true;
  for (Index k = 2; k <= 4; ++k) {
    const int torus = count_domains(torus_planner(k), torus_witnesses(k));
    const int rp3 = count_domains(rp3_power_planner(k), rp3_power_witnesses(k));
    const int even = count_domains(even_config_planner(2, k), even_witnesses(2, k));
    ok = ok && torus == k + 1 && rp3 == 3 * k + 1 && even == 2 * k - 2;
    detail << "k=" << k << " torus=" << torus << " rp3=" << rp3 << " even=" << even;
    for (Index d : {2, 3, 4}) {
      const int thin = count_domains(thin_config_planner(d, k), config_witnesses(d, k));
      ok = ok && thin == 2 * k - 1;
      detail << " thin(d=" << d << ")=" << thin;
    }
    detail << "; ";
  }
  report(2, "sub-planner counts k+1, 3k+1, 2k-1, 2k-2", ok, detail.str());
}

void collision_freeness() {
  const auto t0 = std::chrono::steady_clock::now();
  long failures = 0, paths = 0;
  double worst_endpoint = 0.0, worst_margin = std::numeric_limits<double>::infinity();
  for (int d : {2, 3}) {
    for (int k : {2, 3, 4}) {
      for (double r : {0.1, 1.0}) {
        const TamePlanner p = rigid_planner(d, k, r);
        Rng rng(1000 + 100 * d + 10 * k + static_cast<int>(r * 10));
        for (int trial = 0; trial < 1000; ++trial) {
          const Vector a = random_rigid_state(rng, d, k, r).flat(), b = random_rigid_state(rng, d, k, r).flat();
          const Path path = p.section(a, b);
          Vector x(path.dim());
          double clearance = std::numeric_limits<double>::infinity();
          for (int s = 0; s < 1000; ++s) {
            path.eval_into(s / 999.0, x);
            clearance = std::min(clearance, min_clearance(p.layout(), x));
          }
          const double endpoint =
              std::max(state_distance(p.layout(), path(0.0), a), state_distance(p.layout(), path(1.0), b));
          worst_endpoint = std::max(worst_endpoint, endpoint);
          worst_margin = std::min(worst_margin, clearance - 2 * r);
          if (!(clearance > 2 * r) || !(endpoint < kEndpointTol)) ++failures;
          ++paths;
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream detail;
  detail << paths << " paths x 1000 samples, failures=" << failures << " worst_endpoint=" << worst_endpoint
         << " (tol " << kEndpointTol << ") min(clearance-2r)=" << worst_margin << " time=" << secs << "s (limit "
         << kCollisionTimeLimit << "s)";
  report(3, "collision-free paths", failures == 0 && secs < kCollisionTimeLimit, detail.str());
}

void retraction_identities() {
  Rng rng(4);
  std::uniform_real_distribution<double> radius(0.01, 2.0), unit(0.0, 1.0);
  double worst_rho = 0.0, worst_h0 = 0.0, worst_h1 = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Index d = 2 + trial % 2, k = 2 + trial % 4;
    const Configuration c = random_configuration(rng, d, k, 3.0);
    const double r = radius(rng);
    const double expected = oracle::chi(to_points(c.points())) + 2 * r;
    worst_rho = std::max(worst_rho, std::abs(chi(rho(c, r)) - expected) / expected);

    const ThickConfiguration t(c, chi(c) * (0.1 + 0.89 * unit(rng)));
    const double scale = t.points().cwiseAbs().maxCoeff();
    worst_h0 = std::max(worst_h0, (hat_homotopy(t, 0.0).points() - t.points()).cwiseAbs().maxCoeff() / scale);
    const Matrix rho_pts = rho(c, t.radius()).points();
    worst_h1 = std::max(worst_h1, (hat_homotopy(t, 1.0).points() - rho_pts).cwiseAbs().maxCoeff() /
                                      rho_pts.cwiseAbs().maxCoeff());
  }
  std::ostringstream detail;
  detail << "10000 configurations: chi(rho)-chi-2r rel=" << worst_rho << " H(.,0)-id rel=" << worst_h0
         << " H(.,1)-rho rel=" << worst_h1 << " (tol " << kIdentityTol << ")";
  report(4, "retraction identities", worst_rho <= kIdentityTol && worst_h0 <= kIdentityTol && worst_h1 <= kIdentityTol,
         detail.str());
}

void partition_totality() {
  const std::function<int(const ProjectivePoint&)> classifier = classify_V;
  std::map<int, std::function<bool(const ProjectivePoint&)>> member;
  for (int i = 1; i <= 4; ++i)
    member[i] = [i](const ProjectivePoint& x) {
      const Eigen::Vector4d& q = x.rep();
      return oracle::v_piece({q(0), q(1), q(2), q(3)}) == i;
    };
  const std::function<ProjectivePoint(Rng&)> sampler = uniform_projective;
  const PartitionReport pr = check_partition(classifier, member, sampler, 100000, 5);

  Rng rng(5);
  double worst_sum = 0.0;
  for (int s = 0; s < 100000; ++s) {
    const ProjectivePoint x = uniform_projective(rng);
    double sum = 0.0;
    for (int i = 1; i <= 4; ++i) sum += chart_weight(i, x);
    worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
  }
  std::ostringstream detail;
  detail << "100000 samples, census";
  for (const auto& [label, n] : pr.census) detail << " V" << label << "=" << n;
  detail << ", checks: " << pr.report.checks[0].value << " not-exactly-once, " << pr.report.checks[1].value
         << " disagreements; |sum f - 1|=" << worst_sum << " (tol " << kIdentityTol << ")";
  report(5, "V pieces partition S^3", pr.report.passed() && pr.census.size() == 4 && worst_sum <= kIdentityTol,
         detail.str());
}

void rp3_sections() {
  Rng rng(6);
  double worst_end = 0.0, worst_flip = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const ProjectivePoint x = uniform_projective(rng), y = uniform_projective(rng);
    const Path p = rp3_section(x, y);
    worst_end = std::max({worst_end, projective_distance(p(0.0), x.rep()), projective_distance(p(1.0), y.rep())});
    const Path q1 = rp3_section(-x, y), q2 = rp3_section(x, -y), q3 = rp3_section(-x, -y);
    for (double t : {0.0, 0.2, 0.5, 0.75, 1.0}) {
      const Vector v = p(t);
      worst_flip = std::max({worst_flip, projective_distance(v, q1(t)), projective_distance(v, q2(t)),
                             projective_distance(v, q3(t))});
    }
  }
  std::ostringstream detail;
  detail << "10000 pairs: endpoint=" << worst_end << " sign-flip=" << worst_flip << " (tol " << kEndpointTol << ")";
  report(6, "RP3 section endpoints and sign invariance", worst_end < kEndpointTol && worst_flip < kEndpointTol,
         detail.str());
}

// ---------------------------------------------------------------------------

struct ProbeTarget {
  TamePlanner planner;
  std::function<std::pair<Vector, Vector>(Rng&)> random_pair;
  Vector jump_start, jump_goal;
  Perturbation jump;
};

Vector flat_of(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

Matrix rotate2(const Matrix& pts, double angle) {
  Eigen::Matrix2d rot;
  rot << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return rot * pts;
}

Vector angle_vec(double a) { return (Vector(2) << std::cos(a), std::sin(a)).finished(); }

std::vector<ProbeTarget> probe_targets() {
  std::vector<ProbeTarget> out;
  const Index k = 3;
  const double r = 0.5;

  // Torus: first factor antipodal; turning its goal leaves F1 for F2.
  {
    Vector a(2 * k), b(2 * k);
    a << angle_vec(0.0), angle_vec(1.0), angle_vec(2.0);
    b << angle_vec(std::numbers::pi), angle_vec(2.5), angle_vec(-1.0);
    Perturbation turn = [](const Vector& x, const Vector& y, double delta) {
      Vector g = y;
      g.head(2) = angle_vec(std::numbers::pi + delta);
      return std::pair{x, g};
    };
    out.push_back({torus_planner(k),
                   [k](Rng& rng) {
                     Vector a(2 * k), b(2 * k);
                     for (Index i = 0; i < k; ++i) {
                       a.segment(2 * i, 2) = uniform_sphere(rng, 2);
                       b.segment(2 * i, 2) = uniform_sphere(rng, 2);
                     }
                     return std::pair{a, b};
                   },
                   a, b, turn});
  }

  // RP3 power (k = 2): x y^{-1} on the surface f_1 = 1/10, pushed below it.
  {
    const Eigen::Vector4d z = Eigen::Vector4d(std::sqrt(0.1) * (1 + 1e-12), std::sqrt(0.9), 0, 0).normalized();
    Vector a(8), b(8);
    a << z, Eigen::Vector4d(0, 0, 1, 0);
    b << Eigen::Vector4d(1, 0, 0, 0), Eigen::Vector4d(0.5, 0.5, 0.5, 0.5);
    Perturbation lower = [](const Vector& x, const Vector& y, double delta) {
      Vector s = x;
      const double a0 = std::asin(std::sqrt(0.1)) - delta;
      s.head(4) = Eigen::Vector4d(std::sin(a0), std::cos(a0), 0, 0);
      return std::pair{s, y};
    };
    out.push_back({rp3_power_planner(2),
                   [](Rng& rng) {
                     Vector a(8), b(8);
                     a << uniform_projective(rng).rep(), uniform_projective(rng).rep();
                     b << uniform_projective(rng).rep(), uniform_projective(rng).rep();
                     return std::pair{a, b};
                   },
                   a, b, lower});
  }

  // Thin configurations: cp = 2 with a wide gap; splitting the tied pair makes
  // the gap, and hence the desingularization step, collapse.
  Matrix tied(2, 3), goal3(2, 3);
  tied << 0, 0, 8, 0, 1, 0;
  goal3 << 1, 3, 5, 2, 1, 0;
  Perturbation split = [](const Vector& x, const Vector& y, double delta) {
    Vector s = x;
    s(0) += delta;
    return std::pair{s, y};
  };
  out.push_back({thin_config_planner(2, k),
                 [k](Rng& rng) {
                   return std::pair{random_configuration(rng, 2, k, 3.0).flat(),
                                    random_configuration(rng, 2, k, 3.0).flat()};
                 },
                 flat_of(tied), flat_of(goal3), split});
  out.push_back({thin_config_planner(3, k),
                 [k](Rng& rng) {
                   return std::pair{random_configuration(rng, 3, k, 3.0).flat(),
                                    random_configuration(rng, 3, k, 3.0).flat()};
                 },
                 flat_of((Matrix(3, 3) << 0, 0, 8, 0, 1, 0, 0, 0, 0).finished()),
                 flat_of((Matrix(3, 3) << 1, 3, 5, 2, 1, 0, 1, 1, 1).finished()), split});

  // Even planner: kind B pair; turning the start clockwise gives kind A with a
  // clockwise shortest rotation instead of the counterclockwise half turn.
  Matrix ea(2, 3), eb(2, 3);
  ea << 0, 2, 1, 0, 0, 3;
  eb << 4, 1, 6, 1, 1, -2;
  Perturbation clockwise = [](const Vector& x, const Vector& y, double delta) {
    const Matrix pts = Eigen::Map<const Matrix>(x.data(), 2, x.size() / 2);
    return std::pair{flat_of(rotate2(pts, -delta)), y};
  };
  auto random_thin2 = [k](Rng& rng) {
    return std::pair{random_configuration(rng, 2, k, 3.0).flat(), random_configuration(rng, 2, k, 3.0).flat()};
  };
  out.push_back({even_config_planner(2, k), random_thin2, flat_of(ea), flat_of(eb), clockwise});

  // Thick planners: same witnesses scaled so that chi > r.
  auto random_thick = [k, r](Index d) {
    return [k, r, d](Rng& rng) {
      return std::pair{random_thick_configuration(rng, d, k, r).config().flat(),
                       random_thick_configuration(rng, d, k, r).config().flat()};
    };
  };
  out.push_back({thick_config_planner(2, k, r), random_thick(2), 2 * flat_of(tied), 2 * flat_of(goal3), split});
  out.push_back({thick_even_planner(2, k, r), random_thick(2), 2 * flat_of(ea), 2 * flat_of(eb), clockwise});

  // Rigid planners: jump carried by the orientation factor.
  {
    const TamePlanner p = rigid_planner(2, k, r);
    Vector a(p.state_dim()), b(p.state_dim());
    a << angle_vec(0.0), angle_vec(1.0), angle_vec(2.0), 2 * flat_of(goal3);
    b << angle_vec(std::numbers::pi), angle_vec(2.5), angle_vec(-1.0), 2 * flat_of(tied);
    Perturbation turn = [](const Vector& x, const Vector& y, double delta) {
      Vector g = y;
      g.head(2) = angle_vec(std::numbers::pi + delta);
      return std::pair{x, g};
    };
    out.push_back({p,
                   [k, r](Rng& rng) {
                     return std::pair{random_rigid_state(rng, 2, k, r).flat(), random_rigid_state(rng, 2, k, r).flat()};
                   },
                   a, b, turn});
  }
  {
    const TamePlanner p = rigid_planner(3, k, r);
    const Eigen::Vector4d z = Eigen::Vector4d(std::sqrt(0.1) * (1 + 1e-12), std::sqrt(0.9), 0, 0).normalized();
    Vector a(p.state_dim()), b(p.state_dim());
    const Matrix pa = 2 * (Matrix(3, 3) << 1, 3, 5, 2, 1, 0, 1, 1, 1).finished();
    const Matrix pb = 2 * (Matrix(3, 3) << 0, 0, 8, 0, 1, 0, 0, 0, 0).finished();
    a << z, Eigen::Vector4d(0, 0, 1, 0), Eigen::Vector4d(0, 0, 0, 1), flat_of(pa);
    b << Eigen::Vector4d(1, 0, 0, 0), Eigen::Vector4d(0.5, 0.5, 0.5, 0.5), Eigen::Vector4d(0, 1, 0, 0), flat_of(pb);
    Perturbation lower = [](const Vector& x, const Vector& y, double delta) {
      Vector s = x;
      const double a0 = std::asin(std::sqrt(0.1)) - delta;
      s.head(4) = Eigen::Vector4d(std::sin(a0), std::cos(a0), 0, 0);
      return std::pair{s, y};
    };
    out.push_back({p,
                   [k, r](Rng& rng) {
                     return std::pair{random_rigid_state(rng, 3, k, r).flat(), random_rigid_state(rng, 3, k, r).flat()};
                   },
                   a, b, lower});
  }
  return out;
}

void continuity() {
  std::ostringstream detail;
  bool ok = true;
  Rng rng(7);
  for (const ProbeTarget& target : probe_targets()) {
    const TamePlanner& p = target.planner;
    int accepted = 0, escaped = 0, monotone = 0;
    double worst_ratio = 0.0;
    while (accepted < 100 && escaped < 1000) {
      const auto [a, b] = target.random_pair(rng);
      const ProbeResult res = continuity_probe(p, a, b, random_perturbation(p.layout(), rng), kDeltas);
      if (res.escaped) {
        ++escaped;
        continue;
      }
      ++accepted;
      if (res.report.passed()) ++monotone;
      worst_ratio = std::max(worst_ratio, res.sups.back() / kDeltas.back());
    }
    const ProbeResult jump = jump_probe(p, target.jump_start, target.jump_goal, target.jump, kDeltas, kJumpThreshold);
    const bool this_ok = accepted == 100 && monotone == 100 && jump.report.passed();
    ok = ok && this_ok;
    detail << p.name() << "(dim " << p.state_dim() << "): monotone " << monotone << "/" << accepted << " (skipped " << escaped
           << ", max sup/delta " << worst_ratio << "), jump sups";
    for (double s : jump.sups) detail << " " << s;
    detail << (jump.escaped ? " crossing" : " NOT-crossing") << "; ";
  }
  report(7, "continuity within domains, jumps across boundaries", ok, detail.str());
}

// ---------------------------------------------------------------------------

void oracle_equivalence() {
  Rng rng(8);
  std::uniform_int_distribution<int> small(-2, 2);
  std::uniform_int_distribution<int> pick_k(2, 6);
  long cp_bad = 0, cpbar_bad = 0;
  double chi_err = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const Index k = pick_k(rng);
    const Index d = 2 + 2 * (trial % 2);
    Matrix m(d, k);
    // Integer grid points create ties; duplicates are redrawn.
    for (;;) {
      for (Index j = 0; j < k; ++j)
        for (Index i = 0; i < d; ++i) m(i, j) = small(rng);
      if (oracle::chi(to_points(m)) > 0.0) break;
    }
    const Configuration c(m);
    if (cp(c) != oracle::cp(to_points(m))) ++cp_bad;
    if (cpbar(c) != oracle::cpbar(to_points(m))) ++cpbar_bad;

    const Configuration g = random_configuration(rng, 2 + trial % 3, k, 5.0);
    const double expected = oracle::chi(to_points(g.points()));
    chi_err = std::max(chi_err, std::abs(chi(g) - expected) / expected);
    chi_err = std::max(chi_err, std::abs(chi(c) - oracle::chi(to_points(m))));
    if (cp(g) != oracle::cp(to_points(g.points()))) ++cp_bad;
    if (cpbar(g) != oracle::cpbar(to_points(g.points()))) ++cpbar_bad;
  }
  std::ostringstream detail;
  detail << "20000 configurations each (grid + continuous): cp mismatches=" << cp_bad
         << " cpbar mismatches=" << cpbar_bad << " chi err=" << chi_err << " (tol " << kIdentityTol << ")";
  report(8, "cp / cpbar / chi match brute force", cp_bad == 0 && cpbar_bad == 0 && chi_err <= kIdentityTol,
         detail.str());
}

std::string slurp(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void cli_round_trip() {
  const fs::path dir = fs::temp_directory_path() / "tcplan_acceptance";
  fs::create_directories(dir);
  Rng rng(9);
  std::uniform_real_distribution<double> radius(0.1, 1.0);
  int runs = 0, passes = 0;
  for (int d : {2, 3}) {
    for (int k : {2, 3, 4}) {
      for (int trial = 0; trial < 100; ++trial) {
        cli::Instance inst;
        inst.d = d;
        inst.k = k;
        inst.r = radius(rng);
        inst.start = random_rigid_state(rng, d, k, inst.r).flat();
        inst.goal = random_rigid_state(rng, d, k, inst.r).flat();
        const std::string in = (dir / "instance.json").string(), path = (dir / "path.json").string();
        std::ofstream(in) << cli::instance_to_json(inst).dump();
        std::ostringstream out, err;
        const int plan = cli::run({"plan", "--input", in, "--samples", "200", "--output", path}, out, err);
        const int verify = cli::run({"verify", "--input", in, "--path", path}, out, err);
        ++runs;
        if (plan == 0 && verify == 0) ++passes;
        else std::cerr << "round trip failed (d=" << d << ", k=" << k << "): " << err.str() << out.str();
      }
    }
  }
  const std::string a = (dir / "bench_a.csv").string(), b = (dir / "bench_b.csv").string();
  bool bench_ok = true;
  for (const std::string& csv : {a, b}) {
    const std::string cmd = std::string("\"") + TCPLAN_EXE +
                            "\" bench --d 3 --k 3 --r 0.5 --trials 100 --seed 7 --csv \"" + csv + "\" > \"" +
                            (dir / "bench.log").string() + "\"";
    bench_ok = bench_ok && std::system(cmd.c_str()) == 0;
  }
  const bool identical = bench_ok && !slurp(a).empty() && slurp(a) == slurp(b);
  std::ostringstream detail;
  detail << "plan->verify exit 0 on " << passes << "/" << runs << " instances; bench --seed 7 twice: "
         << (identical ? "byte-identical" : "DIFFERENT") << " (" << slurp(a).size() << " bytes)";
  report(9, "CLI round trip and bench determinism", passes == runs && identical, detail.str());
}

}  // namespace

int main() {
  std::cout.precision(4);
  domain_counts();
  sub_planner_counts();
  collision_freeness();
  retraction_identities();
  partition_totality();
  rp3_sections();
  continuity();
  oracle_equivalence();
  cli_round_trip();
  std::cout << (g_failed == 0 ? "ALL CRITERIA PASS" : std::to_string(g_failed) + " CRITERIA FAILED") << std::endl;
  return g_failed == 0 ? 0 : 1;
}
