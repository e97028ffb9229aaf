#pragma once

#include <cstdint>
#include <vector>

#include "dtrw/errors.hpp"

namespace dtrw {

enum class Offset { node_centered, cell_centered };

/// Uniform 1-D spatial grid. Node-centered grids place site i at
/// x_min + i*dx (both endpoints are sites); cell-centered grids place
/// site i at x_min + (i + 1/2)*dx so the domain endpoints lie between
/// lattice points.
struct Lattice {
    double x_min = 0.0;
    double x_max = 0.0;
    double dx = 0.0;
    int n_sites = 0;
    Offset offset = Offset::node_centered;

    double site(int i) const {
        if (offset == Offset::node_centered) return x_min + i * dx;
        return x_min + (i + 0.5) * dx;
    }
};

/// Builds a lattice, deriving n_sites from the domain length. Throws
/// NonCommensurateDomain unless dx divides (x_max - x_min) per the
/// offset rule within 1e-9 relative tolerance.
Lattice make_lattice(double x_min, double x_max, double dx, Offset offset);

/// The diffusion-limit coupling: dt = dx^2 / (2 D).
double time_step_for(double dx, double diffusivity);

struct TimeGrid {
    double dt = 0.0;
    double diffusivity = 0.0;
    long n_steps = 0;
};

/// Number of steps needed to land on target_t. If target_t is not an
/// integer multiple of dt (1e-9 relative) and snap is false, throws
/// TimeNotReachable; with snap the count is rounded and the realized
/// time (n*dt) is written through realized_t when given.
long steps_to_time(double target_t, double dt, bool snap, double* realized_t = nullptr);

/// Density values on lattice sites at one time level.
struct Field {
    std::vector<double> values;
    long time_index = 0;
};

/// Mixed-sign solution represented as a difference of two non-negative
/// densities sharing lattice and time level.
struct SignedField {
    Field plus;
    Field minus;

    std::vector<double> difference() const {
        std::vector<double> d(plus.values.size());
        for (std::size_t i = 0; i < d.size(); ++i)
            d[i] = plus.values[i] - minus.values[i];
        return d;
    }
};

} // namespace dtrw
