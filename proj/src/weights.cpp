#include "dtrw/weights.hpp"

#include <cmath>
#include <limits>

namespace dtrw {

double stable_logistic(double a) {
    if (a >= 0.0) {
        const double e = std::exp(-a);
        const double p = 1.0 / (1.0 + e);
        // Saturate to 1 minus one ulp while the exponential is still
        // representable; exact 1 only once it underflows entirely.
        if (p == 1.0 && e > 0.0) return 1.0 - std::numeric_limits<double>::epsilon() / 2.0;
        return p;
    }
    const double e = std::exp(a);
    return e / (1.0 + e);
}

namespace {

double force_at(std::span<const double> f, int i) {
    if (i < 0 || i >= static_cast<int>(f.size()))
        throw StencilOutOfRange("weights: force stencil index out of range");
    return f[i];
}

} // namespace

double boltzmann_single(std::span<const double> force_values, int i, double dx, double beta) {
    return stable_logistic(2.0 * beta * dx * force_at(force_values, i));
}

double boltzmann_two_point(std::span<const double> force_values, int i, double dx, double beta) {
    const double fm = force_at(force_values, i - 1);
    const double f0 = force_at(force_values, i);
    const double fp = force_at(force_values, i + 1);
    return stable_logistic(0.5 * beta * dx * (fm + 2.0 * f0 + fp));
}

double naive_linear(std::span<const double> force_values, int i, double dx, double beta) {
    const double p = 0.5 * (beta * force_at(force_values, i) * dx + 1.0);
    if (p < 0.0 || p > 1.0)
        throw ProbabilityOutOfRange("naive_linear: probability outside [0,1]");
    return p;
}

JumpProbabilities build_jump_probabilities(std::span<const double> force_values,
                                           const Lattice& lattice, double dx, double beta,
                                           std::span<const QuadratureRule> rule_per_site) {
    if (rule_per_site.size() != static_cast<std::size_t>(lattice.n_sites))
        throw LengthMismatch("build_jump_probabilities: rule list does not match lattice");
    if (force_values.size() != static_cast<std::size_t>(lattice.n_sites))
        throw LengthMismatch("build_jump_probabilities: force values do not match lattice");

    JumpProbabilities probs;
    probs.p_right.resize(lattice.n_sites);
    probs.p_left.resize(lattice.n_sites);
    for (int i = 0; i < lattice.n_sites; ++i) {
        const double p = (rule_per_site[i] == QuadratureRule::two_point)
                             ? boltzmann_two_point(force_values, i, dx, beta)
                             : boltzmann_single(force_values, i, dx, beta);
        probs.p_right[i] = p;
        probs.p_left[i] = 1.0 - p;
    }
    return probs;
}

} // namespace dtrw
