#include "dtrw/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dtrw {

namespace {

double sup_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

} // namespace

bool cfl_check(const Field& field, double dx, double dt) {
    return sup_abs(field.values) * dt / dx > 1.0;
}

bool cfl_static_estimate(const Field& initial, double boundary_sup, double dx, double dt) {
    const double speed = std::max(sup_abs(initial.values), std::abs(boundary_sup));
    return speed * dt / dx > 1.0;
}

bool prob_saturation(const JumpProbabilities& probs, double margin) {
    if (!(margin > 0.0 && margin < 0.5))
        throw ConfigInvalid("prob_saturation: margin must lie in (0, 1/2)");
    for (double p : probs.p_right)
        if (p < margin || p > 1.0 - margin) return true;
    return false;
}

void mass_and_positivity_observe(const Field& field, RunReport& report) {
    double mass = 0.0;
    double min_v = std::numeric_limits<double>::infinity();
    for (double v : field.values) {
        mass += v;
        min_v = std::min(min_v, v);
    }
    report.mass_trace.push_back(mass);
    report.min_value_trace.push_back(min_v);
}

} // namespace dtrw
