#pragma once

#include <span>
#include <vector>

#include "dtrw/force.hpp"
#include "dtrw/lattice.hpp"

namespace dtrw {

/// Per-site nearest-neighbor jump probabilities; p_left is the
/// complement of p_right everywhere.
struct JumpProbabilities {
    std::vector<double> p_right;
    std::vector<double> p_left;
};

/// Numerically stable logistic 1/(1 + exp(-a)); never evaluates exp of
/// a large positive argument, saturating to 0 or 1 in floating point.
double stable_logistic(double a);

/// Boltzmann weight from the single-point quadrature:
///   p_r = 1 / (1 + exp(-2 beta dx F_i)).
/// Lies in (0,1) for every finite force and every dx.
double boltzmann_single(std::span<const double> force_values, int i, double dx, double beta);

/// Boltzmann weight from the two-point quadrature:
///   p_r = 1 / (1 + exp(-(beta dx / 2) (F_{i-1} + 2 F_i + F_{i+1}))).
/// Requires both neighbors.
double boltzmann_two_point(std::span<const double> force_values, int i, double dx, double beta);

/// The linear weight (beta F_i dx + 1)/2. Not clamped: throws
/// ProbabilityOutOfRange outside [0,1], which is exactly the dx bound
/// that motivates the Boltzmann forms.
double naive_linear(std::span<const double> force_values, int i, double dx, double beta);

/// Assembles p_right per site by the site's quadrature rule and
/// p_left = 1 - p_right.
JumpProbabilities build_jump_probabilities(std::span<const double> force_values,
                                           const Lattice& lattice, double dx, double beta,
                                           std::span<const QuadratureRule> rule_per_site);

/// Weight family selectable from the CLI: boltzmann1 = single-point
/// everywhere, boltzmann2 = two-point with single-point demotions at
/// boundaries and ghosts, naive = the unclamped linear weight.
enum class WeightScheme { boltzmann1, boltzmann2, naive };

} // namespace dtrw
