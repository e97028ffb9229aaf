#pragma once

#include <functional>
#include <span>
#include <utility>

#include "dtrw/lattice.hpp"
#include "dtrw/weights.hpp"

namespace dtrw {

enum class Side { left, right };

enum class BcKind { dirichlet, neumann_fd, neumann_exp, periodic, zero_flux };

/// One side of the domain. value_fn supplies a(t) for Dirichlet and
/// b(t) for Neumann; periodic and zero-flux ignore it.
struct BoundaryCondition {
    Side side = Side::left;
    BcKind kind = BcKind::dirichlet;
    std::function<double(double t)> value_fn;
};

inline BoundaryCondition dirichlet_bc(Side side, std::function<double(double)> a) {
    return {side, BcKind::dirichlet, std::move(a)};
}
inline BoundaryCondition neumann_bc(Side side, std::function<double(double)> b, bool exp_ghost) {
    return {side, exp_ghost ? BcKind::neumann_exp : BcKind::neumann_fd, std::move(b)};
}
inline BoundaryCondition periodic_bc(Side side) { return {side, BcKind::periodic, {}}; }
inline BoundaryCondition zero_flux_bc(Side side) { return {side, BcKind::zero_flux, {}}; }

/// Below this the exponential ghost formula overflows; the stepper falls
/// back to the clamped finite-difference ghost and records the event.
inline constexpr double kGhostFloor = 1e-300;

/// Pins the boundary site to a_t. Unsplit (non-negative) runs reject
/// negative data; split runs route negative data through dirichlet_split
/// instead of calling this with split_mode unset.
Field dirichlet_apply(Field field, Side side, double a_t, bool split_mode = false);

/// Decomposes Dirichlet data for split runs: (max(a,0), max(-a,0)).
std::pair<double, double> dirichlet_split(double a_t);

/// Finite-difference Neumann ghost. Right side: U_ghost = U_L + dx*b;
/// left side mirrored: U_ghost = U_1 - dx*b. May go negative for coarse
/// dx; the caller decides what to do with that.
double neumann_ghost_fd(double boundary_value, double b_t, double dx, Side side);

/// Exponential Neumann ghost. Right side: U_L * exp(dx*b/U_L); left side
/// U_1 * exp(-dx*b/U_1). Strictly positive for positive boundary values,
/// and agrees with the finite-difference ghost to O(dx^2). Throws
/// DegenerateGhost when the boundary value is at or below kGhostFloor.
double neumann_ghost_exp(double boundary_value, double b_t, double dx, Side side);

/// Zero-flux ghost values chosen so one master-equation step conserves
/// the total interior mass exactly:
///   left ghost  = (P_l(first interior) / P_r(left ghost))  * U(first interior)
///   right ghost = (P_r(last interior)  / P_l(right ghost)) * U(last interior)
/// ext_probs covers the extended lattice: index 0 is the left ghost,
/// 1..M the interior sites, M+1 the right ghost.
std::pair<double, double> zero_flux_ghosts(std::span<const double> interior_values,
                                           const JumpProbabilities& ext_probs);

/// Ring index arithmetic for periodic runs.
inline int ring_index(int i, int n_sites) {
    int r = i % n_sites;
    return r < 0 ? r + n_sites : r;
}

} // namespace dtrw
