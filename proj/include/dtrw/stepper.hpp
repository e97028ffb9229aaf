#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "dtrw/boundary.hpp"
#include "dtrw/diagnostics.hpp"
#include "dtrw/force.hpp"
#include "dtrw/lattice.hpp"
#include "dtrw/weights.hpp"

namespace dtrw {

/// Everything one run of the scheme needs: grid, force, weight family
/// and the two boundary conditions. split selects the coupled
/// two-density form for mixed-sign data.
struct SchemeConfig {
    Lattice lattice;
    TimeGrid time_grid;
    ForceSpec force;
    WeightScheme weights = WeightScheme::boltzmann2;
    BoundaryCondition left;
    BoundaryCondition right;
    bool split = false;
};

/// Convenience constructor: derives dt from dx and D and checks the
/// periodic pairing rule.
SchemeConfig make_config(const Lattice& lattice, double diffusivity, ForceSpec force,
                         BoundaryCondition left, BoundaryCondition right,
                         WeightScheme weights = WeightScheme::boltzmann2, bool split = false);

/// Per-step statistics fed back into the RunReport.
struct StepStats {
    double prob_min = 1.0;
    double prob_max = 0.0;
    std::map<std::string, long> fallback_events;
};

/// One master-equation step: every interior site receives
/// P_r(i-1)*U(i-1) + P_l(i+1)*U(i+1) with probabilities built from the
/// step-(n-1) field; boundary sites follow their condition. n is the
/// time index of the returned field.
Field step(const Field& field, const SchemeConfig& config, long n, StepStats* stats = nullptr);

/// Split variant: plus and minus advance under the same jump
/// probabilities, built from the force evaluated on the difference
/// field. Each component stays non-negative.
SignedField step_split(const SignedField& sf, const SchemeConfig& config, long n,
                       StepStats* stats = nullptr);

using State = std::variant<Field, SignedField>;

/// Values seen by observers: the physical field (the difference, for
/// split runs).
std::vector<double> effective_values(const State& state);

struct EvolveResult {
    State state;
    RunReport report;
    bool aborted = false;
    std::string error;
};

/// Observer invoked after every recorded step with the physical values.
using StepObserver = std::function<void(long n, const std::vector<double>& values)>;

/// Runs n_steps master-equation steps, recording mass/min traces, jump
/// probability extrema, CFL status and ghost fallback events. Aborts on
/// NonFiniteField or ProbabilityOutOfRange, returning the partial
/// report. thin > 1 records traces every thin-th step only.
EvolveResult evolve(State initial, const SchemeConfig& config, long n_steps,
                    const std::vector<StepObserver>& observers = {}, long thin = 1);

struct InitialState {
    State state;
    double scale = 1.0;
};

/// Wraps raw initial data: non-negative data becomes a Field unchanged
/// (no forced normalization), mixed-sign data is split into
/// (max(raw,0), max(-raw,0)).
InitialState rescale_initial(const std::vector<double>& raw);

} // namespace dtrw
