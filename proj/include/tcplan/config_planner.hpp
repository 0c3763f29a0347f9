#pragma once

// Planners on ordered configuration spaces F(R^d, k) and their thick
// counterparts F_r(R^d, k).
//
// General d: configurations are stratified by cp(C), the number of distinct
// first coordinates. A pair in A_i x A_j is filed under l = i + j (labels
// 2..2k). Its path desingularizes the start (shifting point m by m * delta
// along the first axis, delta = g / (2k^2) with g the smallest gap between
// distinct projections), lifts every point m onto the lane at height m along
// the second axis, slides the first coordinates across, then undoes the same
// moves into the goal.
//
// Even d: projections are taken along the oriented line through the first two
// points, e_C = (x_2 - x_1) / |x_2 - x_1|, giving cpbar(C) in 2..k. The start
// is first rotated rigidly so that its direction matches the goal's (shortest
// rotation when e_C != -e_C', a fixed half turn in span{e_C, v(e_C)} when
// e_C = -e_C'), after which the same desingularize/lane scheme runs along the
// common direction. Pairs of kind A go to l = i + j and of kind B to
// l = i + j - 1, giving labels 3..2k.
//
// Thick planners come from the thin ones by expanding with H^, running the
// rho-image of the thin path, and contracting into the goal.

#include <tcplan/core/path.hpp>
#include <tcplan/core/types.hpp>
#include <tcplan/tame_planner.hpp>

#include <functional>
#include <vector>

namespace tcplan {

/// Projection data of one configuration. Labels are 0-based column indices.
struct Stratum {
  int count = 0;                              ///< cp or cpbar
  std::vector<std::vector<Index>> clusters;   ///< labels sharing a projection, by ascending value
  std::vector<double> values;                 ///< distinct projection values, ascending
};

int cp(const Configuration& c);
Stratum stratify(const Configuration& c);
/// g / (2 k^2), with g the least gap between distinct projections (1 when there is one).
double desingularization_step(const Stratum& s, Index k);

/// Linear path shifting point m (1-based) by m * delta along the first axis.
Path desingularize(const Configuration& c);
/// Lane-lift, slide and lane-drop between configurations with cp = k.
/// Throws ContractViolation otherwise.
Path generic_connect(const Configuration& a, const Configuration& b);

DomainIndex omega_classify(const Configuration& a, const Configuration& b);
Path omega_section(const Configuration& a, const Configuration& b);

/// e_C = (x_2 - x_1) / |x_2 - x_1|.
Vector direction(const Configuration& c);
int cpbar(const Configuration& c);
Stratum stratify_even(const Configuration& c);

enum class PairKind : int { A = 0, B = 1 };

struct DirectedStratumPair {
  PairKind kind;
  int i = 0;  ///< cpbar of the start
  int j = 0;  ///< cpbar of the goal
  Vector e_start, e_goal;
};

DirectedStratumPair classify_pair_even(const Configuration& a, const Configuration& b);
/// Requires even d (UnsupportedDimension otherwise).
DomainIndex classify_even(const Configuration& a, const Configuration& b);
Path even_section(const Configuration& a, const Configuration& b);

using ConfigSection = std::function<Path(const Configuration&, const Configuration&)>;

/// Three legs on thirds: H^ from a to rho(a), rho along the thin section,
/// H^ reversed from rho(b) to b. Throws ContractViolation unless chi > r at
/// both endpoints.
Path transfer_to_thick(const ConfigSection& thin, const Configuration& a, const Configuration& b, double r);
Path transfer_to_thick(const ConfigSection& thin, const ThickConfiguration& a, const ThickConfiguration& b);

TamePlanner thin_config_planner(Index d, Index k);
TamePlanner even_config_planner(Index d, Index k);
TamePlanner thick_config_planner(Index d, Index k, double r);
TamePlanner thick_even_planner(Index d, Index k, double r);

/// One pair per label of the thin general-d planner (d >= 2).
WitnessSet config_witnesses(Index d, Index k);
/// One pair per label of the even-d planner.
WitnessSet even_witnesses(Index d, Index k);
/// Rescales every configuration so that chi = 2r (strata are scale invariant).
WitnessSet thicken_witnesses(const WitnessSet& thin, Index d, double r);

}  // namespace tcplan
