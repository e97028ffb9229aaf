#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dtrw/lattice.hpp"
#include "dtrw/weights.hpp"

namespace dtrw {

/// Per-run diagnostics accumulated by the evolve loop.
struct RunReport {
    std::vector<double> mass_trace;      // sum of field values per recorded step
    std::vector<double> min_value_trace; // min field value per recorded step
    bool cfl_violated = false;
    std::optional<long> cfl_first_violation_step;
    double prob_min = 1.0;
    double prob_max = 0.0;
    std::map<std::string, long> fallback_events;
    double realized_time = 0.0;

    long fallback_count() const {
        long n = 0;
        for (const auto& [k, v] : fallback_events) n += v;
        return n;
    }
};

/// True when the field's maximum advective speed exceeds the grid speed
/// dx/dt. Field values are read as local speeds, which is exact for
/// Burgers runs where the advective velocity is u itself.
bool cfl_check(const Field& field, double dx, double dt);

/// Pre-run CFL verdict from the initial data plus the supremum of any
/// Dirichlet data injected over the run.
bool cfl_static_estimate(const Field& initial, double boundary_sup, double dx, double dt);

/// True when any jump probability leaves [margin, 1 - margin].
bool prob_saturation(const JumpProbabilities& probs, double margin);

/// Appends the field's mass and minimum to the report traces.
void mass_and_positivity_observe(const Field& field, RunReport& report);

} // namespace dtrw
