#pragma once

#include <span>
#include <vector>

#include "dtrw/lattice.hpp"

namespace dtrw {

/// Travelling-front solution family of the viscous Burgers equation,
///   u(x,t) = (C2 + 2 nu C1^2 tanh(t C2 - x C1 + C3)) / C1.
/// C1 = C2 = 1, C3 = c gives the front u = 1 + 2 nu tanh(c + t - x).
struct TanhSolution {
    double C1 = 1.0;
    double C2 = 1.0;
    double C3 = 0.0;
    double nu = 1.0;
};

double tanh_solution_eval(const TanhSolution& sol, double x, double t);

/// Maximum of |u_t - nu u_xx + u u_x| over the sample grid, evaluated by
/// 4th-order central differences on the closed form. An independent
/// confirmation that the oracle solves the PDE.
double residual_check(const TanhSolution& sol, const Lattice& sample_grid, double t);

/// u = -2 nu phi_x / phi from positive heat-equation samples; central
/// differences in the interior, one-sided at the ends.
std::vector<double> hopf_cole_transform(std::span<const double> phi_values, double dx, double nu);

/// Discrete L1 error dx * sum |numeric - exact|.
double l1_error(const Field& numeric, std::span<const double> exact_at_sites, double dx);

struct ErrorRecord {
    double dx = 0.0;
    double dt = 0.0;
    double t = 0.0;
    double l1_error = 0.0;
};

/// Least-squares slope of log(error) vs log(dx).
double convergence_order(std::span<const ErrorRecord> records);

/// Gaussian heat-kernel solution of u_t = D u_xx (used by the diffusion
/// preset): mass / sqrt(4 pi D (t + t0)) * exp(-(x-x0)^2 / (4 D (t+t0))).
struct GaussianSolution {
    double diffusivity = 1.0;
    double x0 = 0.0;
    double t0 = 1.0;
    double mass = 1.0;
};

double gaussian_solution_eval(const GaussianSolution& sol, double x, double t);

} // namespace dtrw
