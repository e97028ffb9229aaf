#include "dtrw/boundary.hpp"

#include <algorithm>
#include <cmath>

namespace dtrw {

Field dirichlet_apply(Field field, Side side, double a_t, bool split_mode) {
    if (!std::isfinite(a_t)) throw ConfigInvalid("dirichlet_apply: non-finite boundary value");
    if (a_t < 0.0 && !split_mode)
        throw NegativeDirichletOnUnsplitRun("dirichlet_apply: negative Dirichlet data on unsplit run");
    if (field.values.empty()) throw ConfigInvalid("dirichlet_apply: empty field");
    if (side == Side::left)
        field.values.front() = a_t;
    else
        field.values.back() = a_t;
    return field;
}

std::pair<double, double> dirichlet_split(double a_t) {
    return {std::max(a_t, 0.0), std::max(-a_t, 0.0)};
}

double neumann_ghost_fd(double boundary_value, double b_t, double dx, Side side) {
    return (side == Side::right) ? boundary_value + dx * b_t : boundary_value - dx * b_t;
}

double neumann_ghost_exp(double boundary_value, double b_t, double dx, Side side) {
    if (!(boundary_value > kGhostFloor))
        throw DegenerateGhost("neumann_ghost_exp: boundary value at or below the ghost floor");
    const double arg = dx * b_t / boundary_value;
    return boundary_value * std::exp(side == Side::right ? arg : -arg);
}

std::pair<double, double> zero_flux_ghosts(std::span<const double> interior_values,
                                           const JumpProbabilities& ext_probs) {
    const std::size_t m = interior_values.size();
    if (ext_probs.p_right.size() != m + 2)
        throw LengthMismatch("zero_flux_ghosts: probabilities must cover the extended lattice");
    const double left = ext_probs.p_left[1] / ext_probs.p_right[0] * interior_values.front();
    const double right = ext_probs.p_right[m] / ext_probs.p_left[m + 1] * interior_values.back();
    return {left, right};
}

} // namespace dtrw
