#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "dtrw/lattice.hpp"

namespace dtrw {

enum class ForceKind { prescribed, state_dependent };

/// Drift term of the advection-diffusion equation. A prescribed force is
/// F(x,t); a state-dependent force also sees the local density value
/// (Burgers: F = u). beta is the inverse temperature pairing with the
/// diffusivity to set the advection coefficient 2*beta*D.
struct ForceSpec {
    ForceKind kind = ForceKind::prescribed;
    std::function<double(double x, double t, double u_at_x)> evaluate;
    double beta = 1.0;
    std::string description;
};

/// F = u with beta = 1/(4 nu); pairs with D = nu to reproduce the
/// viscous Burgers equation.
ForceSpec burgers_force(double nu);

/// Zero drift (pure diffusion).
ForceSpec zero_force(double beta = 1.0);

/// Looks up a preset by name ("burgers" needs nu; "diffusion" ignores it).
ForceSpec force_preset(const std::string& name, double nu);

enum class QuadratureRule { single_point, two_point };
enum class Direction { left, right };

/// Samples the force at every lattice site at time t. Prescribed forces
/// ignore the field values.
std::vector<double> force_on_lattice(const ForceSpec& spec, const Lattice& lattice,
                                     double t, const Field& field);

/// Potential difference between site i and its neighbor in the given
/// direction, as a quadrature over the force samples:
///   single-point: dx * F_i (either direction)
///   two-point right: (dx/2) * (F_i + F_{i+1})
///   two-point left:  (dx/2) * (F_{i-1} + F_i)
double potential_increment(std::span<const double> force_values, int i, Direction dir,
                           double dx, QuadratureRule rule);

} // namespace dtrw
