#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtrw/oracle.hpp"
#include "dtrw/stepper.hpp"

namespace dtrw {

enum class Preset { example1_dirichlet, example2_neumann, custom };
enum class GhostRule { fd, exp };

/// The Burgers ladder of spatial spacings; each lands exactly on
/// t = 6250/81 with dt = dx^2 / 0.9.
std::vector<double> default_dx_ladder();

struct ExperimentConfig {
    Preset preset = Preset::example1_dirichlet;
    double nu = 0.45;
    double c = -3.0;
    std::vector<double> dx_list = default_dx_ladder();
    double target_t = 6250.0 / 81.0;
    WeightScheme weights = WeightScheme::boltzmann2;
    GhostRule ghost = GhostRule::exp;
    std::string output_dir; // empty: no files written
    bool snap = false;
    std::uint64_t seed = 0;
    bool trace_error = false; // per-step error CSV

    // custom-preset selections
    std::string custom_force = "diffusion"; // "burgers" | "diffusion"
    std::string custom_bc = "zero-flux";    // "zero-flux" | "periodic" | "dirichlet"
    std::string custom_oracle;              // "burgers-tanh" | "heat-gaussian" | ""
};

/// Parses an ExperimentConfig from a JSON document (the CLI layers flag
/// overrides on top).
ExperimentConfig config_from_json(const std::string& json_text);

struct RunResult {
    double dx = 0.0;
    double dt = 0.0;
    long n_steps = 0;
    double realized_t = 0.0;
    std::optional<double> l1 = std::nullopt;
    RunReport report;
    bool ok = true;
    std::string error;
    std::vector<double> x;         // site coordinates
    std::vector<double> numeric;   // final field
    std::vector<double> exact;     // oracle samples (empty when no oracle)
    std::vector<ErrorRecord> error_trace;
};

/// Burgers on [0,100] with time-dependent Dirichlet data, node-centered
/// grid, compared against the exact tanh front at the target time. One
/// result per dx; a failed run is reported in-place and does not stop
/// the ladder.
std::vector<RunResult> run_example1(const ExperimentConfig& config);

/// Burgers on [0,100] with time-dependent Neumann data on a
/// cell-centered grid and ghost points per config.ghost.
std::vector<RunResult> run_example2(const ExperimentConfig& config);

/// Generic pipeline for the custom preset.
std::vector<RunResult> run_custom(const ExperimentConfig& config);

std::vector<RunResult> run_preset(const ExperimentConfig& config);

/// Summary CSV: one row per dx with the columns
/// dx,dt,n_steps,realized_t,l1_error,mass_initial,mass_final,
/// cfl_violated,prob_min,prob_max,fallback_events.
std::string summary_csv(const std::vector<RunResult>& results);

/// Solution CSV: x,u_numeric,u_exact,abs_error.
std::string solution_csv(const RunResult& result);

/// Deterministic per-run file name.
std::string solution_csv_name(Preset preset, std::size_t dx_index);

/// Writes summary + per-run solution CSVs under config.output_dir.
void write_outputs(const ExperimentConfig& config, const std::vector<RunResult>& results);

/// Convergence slope from a summary CSV produced by this tool, using
/// the finest_count smallest dx rows (0 = all rows).
double convergence_from_summary_csv(const std::string& csv_text, std::size_t finest_count = 4);

/// Static CFL verdict for the Burgers presets (initial sup joined with
/// the Dirichlet data sup over [0, target_t]).
bool example_cfl_static(const ExperimentConfig& config, double dx);

} // namespace dtrw
