#include "dtrw/lattice.hpp"

#include <cmath>

namespace dtrw {

Lattice make_lattice(double x_min, double x_max, double dx, Offset offset) {
    if (!(x_max > x_min)) throw ConfigInvalid("make_lattice: x_max must exceed x_min");
    if (!(dx > 0.0)) throw ConfigInvalid("make_lattice: dx must be positive");

    const double ratio = (x_max - x_min) / dx;
    const double rounded = std::round(ratio);
    if (std::abs(ratio - rounded) > 1e-9 * std::max(1.0, std::abs(ratio)))
        throw NonCommensurateDomain("make_lattice: dx does not evenly divide the domain");

    const long intervals = static_cast<long>(rounded);
    const long n = (offset == Offset::node_centered) ? intervals + 1 : intervals;
    if (n < 3) throw ConfigInvalid("make_lattice: fewer than 3 sites");

    Lattice lat;
    lat.x_min = x_min;
    lat.x_max = x_max;
    lat.dx = dx;
    lat.n_sites = static_cast<int>(n);
    lat.offset = offset;
    return lat;
}

double time_step_for(double dx, double diffusivity) {
    if (!(dx > 0.0)) throw ConfigInvalid("time_step_for: dx must be positive");
    if (!(diffusivity > 0.0)) throw ConfigInvalid("time_step_for: diffusivity must be positive");
    return dx * dx / (2.0 * diffusivity);
}

long steps_to_time(double target_t, double dt, bool snap, double* realized_t) {
    if (target_t < 0.0) throw ConfigInvalid("steps_to_time: target_t must be non-negative");
    if (!(dt > 0.0)) throw ConfigInvalid("steps_to_time: dt must be positive");

    const double ratio = target_t / dt;
    const double rounded = std::round(ratio);
    const bool exact = std::abs(ratio - rounded) <= 1e-9 * std::max(1.0, std::abs(ratio));
    if (!exact && !snap)
        throw TimeNotReachable("steps_to_time: target time is not an integer multiple of dt");

    const long n = static_cast<long>(rounded);
    if (realized_t) *realized_t = n * dt;
    return n;
}

} // namespace dtrw
