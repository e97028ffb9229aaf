#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dtrw/force.hpp"
#include "dtrw/lattice.hpp"

namespace dtrw {

/// Particle-ensemble simulation of the walk on a periodic ring with a
/// prescribed force; validates that the empirical density follows the
/// master equation.
struct EnsembleConfig {
    long n_particles = 1;
    std::uint64_t seed = 0;
    Lattice lattice; // periodic ring
    ForceSpec force; // prescribed kind only
    long n_steps = 0;
    double dt = 1.0; // timestamps time-dependent prescribed forces
    double beta = 1.0;
    QuadratureRule quadrature = QuadratureRule::two_point;
};

/// Counter-based uniform draw in [0,1) from (seed, particle, step); the
/// per-particle stream makes parallel and serial execution agree bitwise.
double counter_uniform(std::uint64_t seed, std::uint64_t particle, std::uint64_t step);

/// Evolves the ensemble from a delta at initial_site and returns the
/// site-occupation frequencies (sums to 1).
std::vector<double> simulate_ensemble(const EnsembleConfig& config, int initial_site);

/// Total variation distance: half the l1 distance after normalizing
/// both vectors to unit mass.
double tv_distance(std::span<const double> p, std::span<const double> q);

} // namespace dtrw
