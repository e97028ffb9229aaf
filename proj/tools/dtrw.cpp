// Experiment runner for the DTRW advection-diffusion solver.
//
//   dtrw run       presets (example1/example2/custom) and the dx ladder
//   dtrw mc        particle-ensemble validation against the master equation
//   dtrw converge  convergence slope from an existing summary CSV

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dtrw/experiment.hpp"
#include "dtrw/montecarlo.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw dtrw::ConfigInvalid("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int cmd_run(const dtrw::ExperimentConfig& cfg) {
    const auto results = dtrw::run_preset(cfg);
    dtrw::write_outputs(cfg, results);
    std::cout << dtrw::summary_csv(results);
    int failures = 0;
    for (const auto& r : results) {
        if (!r.ok) {
            std::cerr << "run dx=" << r.dx << " aborted: " << r.error << "\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}

int cmd_mc(std::uint64_t seed, long n_particles, long n_steps, int n_sites,
           const std::string& out_path) {
    using namespace dtrw;
    EnsembleConfig cfg;
    // Cell-centered so the ring has exactly one site per unit cell.
    cfg.lattice = make_lattice(0.0, static_cast<double>(n_sites), 1.0, Offset::cell_centered);
    cfg.force.kind = ForceKind::prescribed;
    const double length = static_cast<double>(n_sites);
    cfg.force.evaluate = [length](double x, double, double) {
        return std::sin(2.0 * M_PI * x / length);
    };
    cfg.force.beta = 1.0;
    cfg.beta = 1.0;
    cfg.seed = seed;
    cfg.n_particles = n_particles;
    cfg.n_steps = n_steps;

    const auto empirical = simulate_ensemble(cfg, n_sites / 2);

    // Master-equation reference with the same weights.
    SchemeConfig scheme = make_config(cfg.lattice, 0.5, cfg.force, periodic_bc(Side::left),
                                      periodic_bc(Side::right));
    Field delta;
    delta.values.assign(n_sites, 0.0);
    delta.values[n_sites / 2] = 1.0;
    auto ev = evolve(delta, scheme, n_steps);
    const auto reference = effective_values(ev.state);

    std::ostringstream csv;
    csv << "site,empirical,master_equation\n";
    for (int i = 0; i < n_sites; ++i)
        csv << i << ',' << empirical[i] << ',' << reference[i] << '\n';
    const double tv = tv_distance(empirical, reference);
    csv << "# tv_distance," << tv << '\n';

    if (!out_path.empty()) {
        std::ofstream f(out_path);
        f << csv.str();
    }
    std::cout << csv.str();
    return 0;
}

int cmd_converge(const std::string& csv_path, std::size_t finest) {
    const double slope = dtrw::convergence_from_summary_csv(read_file(csv_path), finest);
    std::cout << "slope," << slope << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Discrete-time random walk solver for 1-D nonlinear advection-diffusion"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "Run a preset or custom experiment");
    std::string config_path, preset = "example1-dirichlet", weights = "boltzmann2", ghost = "exp";
    std::string out_dir, custom_force = "diffusion", custom_bc = "zero-flux", custom_oracle;
    std::vector<double> dx_values;
    double nu = 0.45, c = -3.0, target_t = 6250.0 / 81.0;
    bool snap = false, trace_error = false;
    std::uint64_t seed = 0;
    run->add_option("--config", config_path, "JSON config file (flags override)");
    run->add_option("--preset", preset, "example1-dirichlet | example2-neumann | custom");
    run->add_option("--nu", nu, "viscosity / diffusivity");
    run->add_option("--c", c, "front offset constant");
    run->add_option("--dx", dx_values, "spatial spacing (repeatable)");
    run->add_option("--t", target_t, "target time");
    run->add_option("--weights", weights, "boltzmann1 | boltzmann2 | naive");
    run->add_option("--ghost", ghost, "fd | exp");
    run->add_flag("--snap", snap, "round to the nearest reachable time");
    run->add_option("--out", out_dir, "output directory for CSV files");
    run->add_option("--seed", seed, "seed (recorded in config)");
    run->add_flag("--trace-error", trace_error, "emit per-step error CSVs");
    run->add_option("--force", custom_force, "custom preset force: burgers | diffusion");
    run->add_option("--bc", custom_bc, "custom preset BCs: zero-flux | periodic | dirichlet");
    run->add_option("--oracle", custom_oracle, "custom preset oracle: burgers-tanh | heat-gaussian");

    // mc
    auto* mc = app.add_subcommand("mc", "Monte Carlo validation on a periodic ring");
    std::uint64_t mc_seed = 1;
    long mc_particles = 100000, mc_steps = 50;
    int mc_sites = 32;
    std::string mc_out;
    mc->add_option("--seed", mc_seed, "RNG seed");
    mc->add_option("--particles", mc_particles, "ensemble size");
    mc->add_option("--steps", mc_steps, "number of steps");
    mc->add_option("--sites", mc_sites, "ring size");
    mc->add_option("--out", mc_out, "CSV output path");

    // converge
    auto* conv = app.add_subcommand("converge", "Convergence slope from a summary CSV");
    std::string conv_csv;
    std::size_t conv_finest = 4;
    conv->add_option("csv", conv_csv, "summary CSV path")->required();
    conv->add_option("--finest", conv_finest, "number of finest dx rows to fit (0 = all)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            dtrw::ExperimentConfig cfg;
            if (!config_path.empty()) cfg = dtrw::config_from_json(read_file(config_path));
            if (run->count("--preset") || config_path.empty()) {
                if (preset == "example1-dirichlet") cfg.preset = dtrw::Preset::example1_dirichlet;
                else if (preset == "example2-neumann") cfg.preset = dtrw::Preset::example2_neumann;
                else if (preset == "custom") cfg.preset = dtrw::Preset::custom;
                else throw dtrw::ConfigInvalid("unknown preset: " + preset);
            }
            if (run->count("--nu")) cfg.nu = nu;
            if (run->count("--c")) cfg.c = c;
            if (!dx_values.empty()) cfg.dx_list = dx_values;
            if (run->count("--t")) cfg.target_t = target_t;
            if (run->count("--weights")) {
                if (weights == "boltzmann1") cfg.weights = dtrw::WeightScheme::boltzmann1;
                else if (weights == "boltzmann2") cfg.weights = dtrw::WeightScheme::boltzmann2;
                else if (weights == "naive") cfg.weights = dtrw::WeightScheme::naive;
                else throw dtrw::ConfigInvalid("unknown weights: " + weights);
            }
            if (run->count("--ghost")) {
                if (ghost == "fd") cfg.ghost = dtrw::GhostRule::fd;
                else if (ghost == "exp") cfg.ghost = dtrw::GhostRule::exp;
                else throw dtrw::ConfigInvalid("unknown ghost rule: " + ghost);
            }
            if (run->count("--out")) cfg.output_dir = out_dir;
            if (run->count("--snap")) cfg.snap = snap;
            if (run->count("--seed")) cfg.seed = seed;
            if (run->count("--trace-error")) cfg.trace_error = trace_error;
            if (run->count("--force")) cfg.custom_force = custom_force;
            if (run->count("--bc")) cfg.custom_bc = custom_bc;
            if (run->count("--oracle")) cfg.custom_oracle = custom_oracle;
            return cmd_run(cfg);
        }
        if (mc->parsed()) return cmd_mc(mc_seed, mc_particles, mc_steps, mc_sites, mc_out);
        if (conv->parsed()) return cmd_converge(conv_csv, conv_finest);
    } catch (const dtrw::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
