#pragma once

// Four-domain planner on RP^3 and its k-fold product.
//
// RP^3 is covered by the affine charts U_i = {x_i != 0}, i = 1..4 (1-based
// throughout this header). The closed-ish pieces V_i cut out by
// f_j = x_j^2 < 2j/20 (j < i), f_i >= 2i/20 sit inside U_i and partition RP^3.
// A pair ([x], [y]) is filed under E_i when [x][y]^{-1} lies in V_i; its path
// contracts [x][y]^{-1} to e_i inside the chart, right-translated by [y], and
// then follows the fixed arc from e_i to e_1 (also translated by [y]) so that
// it ends at [y].

#include <tcplan/core/path.hpp>
#include <tcplan/core/types.hpp>
#include <tcplan/tame_planner.hpp>

#include <span>

namespace tcplan {

/// Chart coordinates of [x] in U_i: divide by x_i and drop slot i.
/// Throws ChartDomainError when |x_i| <= 1e-12.
Eigen::Vector3d chart_phi(int chart, const ProjectivePoint& x);
/// Inverse chart: insert 1 at slot i and normalize.
ProjectivePoint chart_psi(int chart, const Eigen::Vector3d& y);

/// f_i([x]) = x_i^2.
double chart_weight(int chart, const ProjectivePoint& x);
/// 2j / ((d + 1)(d + 2)); for RP^3 this is j / 10.
double v_threshold(int j, int d = 3);
/// The unique i with [x] in V_i.
int classify_V(const ProjectivePoint& x);

/// H^i([z], t) = psi_i((1 - t) phi_i([z])).
ProjectivePoint contraction_H(int chart, const ProjectivePoint& z, double t);
/// Closed-form path s -> H^i([z], s) on unit representatives.
Path contraction_path(int chart, const ProjectivePoint& z);

int classify_E(const ProjectivePoint& x, const ProjectivePoint& y);
Path rp3_section(const ProjectivePoint& x, const ProjectivePoint& y);

DomainIndex rp3_product_classify(std::span<const ProjectivePoint> x, std::span<const ProjectivePoint> y);
Path rp3_product_section(std::span<const ProjectivePoint> x, std::span<const ProjectivePoint> y);

TamePlanner rp3_planner();
/// Planner on (RP^3)^k with labels k..4k.
TamePlanner rp3_power_planner(Index k);
WitnessSet rp3_power_witnesses(Index k);

}  // namespace tcplan
