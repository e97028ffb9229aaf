#include "dtrw/force.hpp"

#include <cmath>

namespace dtrw {

ForceSpec burgers_force(double nu) {
    if (!(nu > 0.0)) throw ConfigInvalid("burgers_force: nu must be positive");
    ForceSpec spec;
    spec.kind = ForceKind::state_dependent;
    spec.evaluate = [](double, double, double u) { return u; };
    spec.beta = 1.0 / (4.0 * nu);
    spec.description = "burgers";
    return spec;
}

ForceSpec zero_force(double beta) {
    ForceSpec spec;
    spec.kind = ForceKind::prescribed;
    spec.evaluate = [](double, double, double) { return 0.0; };
    spec.beta = beta;
    spec.description = "diffusion";
    return spec;
}

ForceSpec force_preset(const std::string& name, double nu) {
    if (name == "burgers") return burgers_force(nu);
    if (name == "diffusion") return zero_force();
    throw ConfigInvalid("unknown force preset: " + name);
}

std::vector<double> force_on_lattice(const ForceSpec& spec, const Lattice& lattice,
                                     double t, const Field& field) {
    if (static_cast<int>(field.values.size()) != lattice.n_sites)
        throw LengthMismatch("force_on_lattice: field does not match lattice");
    std::vector<double> f(lattice.n_sites);
    for (int i = 0; i < lattice.n_sites; ++i) {
        f[i] = spec.evaluate(lattice.site(i), t, field.values[i]);
        if (!std::isfinite(f[i]))
            throw NonFiniteForce("force_on_lattice: non-finite force value");
    }
    return f;
}

double potential_increment(std::span<const double> force_values, int i, Direction dir,
                           double dx, QuadratureRule rule) {
    const int n = static_cast<int>(force_values.size());
    if (i < 0 || i >= n) throw StencilOutOfRange("potential_increment: site index out of range");
    if (rule == QuadratureRule::single_point) return dx * force_values[i];
    if (dir == Direction::right) {
        if (i + 1 >= n) throw StencilOutOfRange("potential_increment: missing right neighbor");
        return 0.5 * dx * (force_values[i] + force_values[i + 1]);
    }
    if (i - 1 < 0) throw StencilOutOfRange("potential_increment: missing left neighbor");
    return 0.5 * dx * (force_values[i - 1] + force_values[i]);
}

} // namespace dtrw
