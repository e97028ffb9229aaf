#include "dtrw/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace dtrw {

std::vector<double> default_dx_ladder() {
    return {25.0 / 3,  25.0 / 12,  25.0 / 27,  25.0 / 48,  1.0 / 3,
            25.0 / 108, 25.0 / 147, 25.0 / 192, 25.0 / 243, 1.0 / 12};
}

namespace {

constexpr double kDomainLength = 100.0;

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double sech2(double z) {
    const double s = 1.0 / std::cosh(z);
    return s * s;
}

TanhSolution burgers_oracle(const ExperimentConfig& cfg) {
    return TanhSolution{1.0, 1.0, cfg.c, cfg.nu};
}

std::vector<double> exact_samples(const TanhSolution& sol, const Lattice& lat, double t) {
    std::vector<double> e(lat.n_sites);
    for (int i = 0; i < lat.n_sites; ++i) e[i] = tanh_solution_eval(sol, lat.site(i), t);
    return e;
}

struct BurgersSetup {
    SchemeConfig scheme;
    Field initial;
    TanhSolution oracle;
};

BurgersSetup burgers_setup(const ExperimentConfig& cfg, double dx, bool neumann) {
    BurgersSetup setup;
    setup.oracle = burgers_oracle(cfg);
    const Offset offset = neumann ? Offset::cell_centered : Offset::node_centered;
    const Lattice lat = make_lattice(0.0, kDomainLength, dx, offset);

    BoundaryCondition left, right;
    const double nu = cfg.nu;
    const double c = cfg.c;
    if (neumann) {
        const bool exp_ghost = cfg.ghost == GhostRule::exp;
        left = neumann_bc(Side::left, [nu, c](double t) { return -2.0 * nu * sech2(t + c); },
                          exp_ghost);
        right = neumann_bc(
            Side::right,
            [nu, c](double t) { return -2.0 * nu * sech2(t + c - kDomainLength); }, exp_ghost);
    } else {
        left = dirichlet_bc(Side::left,
                            [nu, c](double t) { return 1.0 + 2.0 * nu * std::tanh(t + c); });
        right = dirichlet_bc(Side::right, [nu, c](double t) {
            return 1.0 + 2.0 * nu * std::tanh(t + c - kDomainLength);
        });
    }
    setup.scheme = make_config(lat, cfg.nu, burgers_force(cfg.nu), std::move(left),
                               std::move(right), cfg.weights);

    setup.initial.values = exact_samples(setup.oracle, lat, 0.0);
    return setup;
}

RunResult execute(const ExperimentConfig& cfg, const SchemeConfig& scheme, Field initial,
                  const TanhSolution* oracle) {
    RunResult res;
    res.dx = scheme.lattice.dx;
    res.dt = scheme.time_grid.dt;
    res.x.resize(scheme.lattice.n_sites);
    for (int i = 0; i < scheme.lattice.n_sites; ++i) res.x[i] = scheme.lattice.site(i);

    try {
        double realized = 0.0;
        res.n_steps = steps_to_time(cfg.target_t, res.dt, cfg.snap, &realized);

        std::vector<StepObserver> observers;
        if (cfg.trace_error && oracle) {
            const Lattice lat = scheme.lattice;
            const TanhSolution sol = *oracle;
            const double dt = res.dt;
            observers.push_back([&res, lat, sol, dt](long n, const std::vector<double>& v) {
                Field f;
                f.values = v;
                const auto exact = exact_samples(sol, lat, n * dt);
                res.error_trace.push_back({lat.dx, dt, n * dt, l1_error(f, exact, lat.dx)});
            });
        }

        EvolveResult ev = evolve(std::move(initial), scheme, res.n_steps, observers);
        res.report = std::move(ev.report);
        res.realized_t = res.report.realized_time;
        res.numeric = effective_values(ev.state);
        if (ev.aborted) {
            res.ok = false;
            res.error = ev.error;
            return res;
        }
        if (oracle) {
            res.exact = exact_samples(*oracle, scheme.lattice, res.realized_t);
            Field f;
            f.values = res.numeric;
            res.l1 = l1_error(f, res.exact, res.dx);
        }
    } catch (const Error& e) {
        res.ok = false;
        res.error = e.what();
    }
    return res;
}

// Fans the dx ladder out over a bounded worker pool; results keep the
// dx_list order regardless of scheduling.
template <typename RunOne>
std::vector<RunResult> run_ladder(const ExperimentConfig& cfg, RunOne run_one) {
    std::vector<RunResult> results(cfg.dx_list.size());
    long n_workers = 1;
    if (const char* env = std::getenv("DTRW_THREADS")) n_workers = std::atol(env);
    if (n_workers < 1) n_workers = 1;
    n_workers = std::min<long>(n_workers, static_cast<long>(cfg.dx_list.size()));

    if (n_workers == 1) {
        for (std::size_t i = 0; i < cfg.dx_list.size(); ++i) results[i] = run_one(cfg.dx_list[i]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (long w = 0; w < n_workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < cfg.dx_list.size();
                 i = next.fetch_add(1))
                results[i] = run_one(cfg.dx_list[i]);
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

} // namespace

std::vector<RunResult> run_example1(const ExperimentConfig& config) {
    return run_ladder(config, [&](double dx) {
        try {
            BurgersSetup s = burgers_setup(config, dx, false);
            return execute(config, s.scheme, std::move(s.initial), &s.oracle);
        } catch (const Error& e) {
            RunResult r;
            r.dx = dx;
            r.ok = false;
            r.error = e.what();
            return r;
        }
    });
}

std::vector<RunResult> run_example2(const ExperimentConfig& config) {
    return run_ladder(config, [&](double dx) {
        try {
            BurgersSetup s = burgers_setup(config, dx, true);
            return execute(config, s.scheme, std::move(s.initial), &s.oracle);
        } catch (const Error& e) {
            RunResult r;
            r.dx = dx;
            r.ok = false;
            r.error = e.what();
            return r;
        }
    });
}

std::vector<RunResult> run_custom(const ExperimentConfig& config) {
    return run_ladder(config, [&](double dx) {
        RunResult shell;
        shell.dx = dx;
        try {
            const Lattice lat = make_lattice(0.0, kDomainLength, dx, Offset::node_centered);
            ForceSpec force = force_preset(config.custom_force, config.nu);

            BoundaryCondition left, right;
            TanhSolution tanh_sol = burgers_oracle(config);
            if (config.custom_bc == "periodic") {
                left = periodic_bc(Side::left);
                right = periodic_bc(Side::right);
            } else if (config.custom_bc == "zero-flux") {
                left = zero_flux_bc(Side::left);
                right = zero_flux_bc(Side::right);
            } else if (config.custom_bc == "dirichlet") {
                const double nu = config.nu, c = config.c;
                left = dirichlet_bc(Side::left, [nu, c](double t) {
                    return 1.0 + 2.0 * nu * std::tanh(t + c);
                });
                right = dirichlet_bc(Side::right, [nu, c](double t) {
                    return 1.0 + 2.0 * nu * std::tanh(t + c - kDomainLength);
                });
            } else {
                throw ConfigInvalid("run_custom: unknown boundary kind '" + config.custom_bc +
                                    "'");
            }

            SchemeConfig scheme = make_config(lat, config.nu, std::move(force), std::move(left),
                                              std::move(right), config.weights);

            Field initial;
            GaussianSolution gauss{config.nu, kDomainLength / 2.0, 1.0, 1.0};
            if (config.custom_oracle == "burgers-tanh") {
                initial.values = exact_samples(tanh_sol, lat, 0.0);
            } else {
                initial.values.resize(lat.n_sites);
                for (int i = 0; i < lat.n_sites; ++i)
                    initial.values[i] = gaussian_solution_eval(gauss, lat.site(i), 0.0);
            }

            RunResult res = execute(config, scheme, std::move(initial),
                                    config.custom_oracle == "burgers-tanh" ? &tanh_sol : nullptr);
            if (res.ok && config.custom_oracle == "heat-gaussian") {
                res.exact.resize(lat.n_sites);
                for (int i = 0; i < lat.n_sites; ++i)
                    res.exact[i] = gaussian_solution_eval(gauss, lat.site(i), res.realized_t);
                Field f;
                f.values = res.numeric;
                res.l1 = l1_error(f, res.exact, dx);
            }
            return res;
        } catch (const Error& e) {
            shell.ok = false;
            shell.error = e.what();
            return shell;
        }
    });
}

std::vector<RunResult> run_preset(const ExperimentConfig& config) {
    switch (config.preset) {
    case Preset::example1_dirichlet: return run_example1(config);
    case Preset::example2_neumann: return run_example2(config);
    case Preset::custom: return run_custom(config);
    }
    throw ConfigInvalid("run_preset: unknown preset");
}

std::string summary_csv(const std::vector<RunResult>& results) {
    std::ostringstream out;
    out << "dx,dt,n_steps,realized_t,l1_error,mass_initial,mass_final,cfl_violated,"
           "prob_min,prob_max,fallback_events\n";
    for (const auto& r : results) {
        const double mass0 = r.report.mass_trace.empty() ? std::nan("") : r.report.mass_trace.front();
        const double mass1 = r.report.mass_trace.empty() ? std::nan("") : r.report.mass_trace.back();
        out << fmt17(r.dx) << ',' << fmt17(r.dt) << ',' << r.n_steps << ','
            << fmt17(r.realized_t) << ',' << fmt17(r.l1.value_or(std::nan(""))) << ','
            << fmt17(mass0) << ',' << fmt17(mass1) << ','
            << (r.report.cfl_violated ? "true" : "false") << ',' << fmt17(r.report.prob_min)
            << ',' << fmt17(r.report.prob_max) << ',' << r.report.fallback_count() << '\n';
    }
    return out.str();
}

std::string solution_csv(const RunResult& result) {
    std::ostringstream out;
    out << "x,u_numeric,u_exact,abs_error\n";
    for (std::size_t i = 0; i < result.numeric.size(); ++i) {
        const double exact = i < result.exact.size() ? result.exact[i] : std::nan("");
        out << fmt17(result.x[i]) << ',' << fmt17(result.numeric[i]) << ',' << fmt17(exact)
            << ',' << fmt17(std::abs(result.numeric[i] - exact)) << '\n';
    }
    return out.str();
}

std::string solution_csv_name(Preset preset, std::size_t dx_index) {
    const char* name = preset == Preset::example1_dirichlet ? "example1"
                       : preset == Preset::example2_neumann ? "example2"
                                                            : "custom";
    return std::string("solution_") + name + "_" + std::to_string(dx_index) + ".csv";
}

void write_outputs(const ExperimentConfig& config, const std::vector<RunResult>& results) {
    if (config.output_dir.empty()) return;
    namespace fs = std::filesystem;
    fs::create_directories(config.output_dir);
    {
        std::ofstream f(fs::path(config.output_dir) / "summary.csv");
        f << summary_csv(results);
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
        std::ofstream f(fs::path(config.output_dir) / solution_csv_name(config.preset, i));
        f << solution_csv(results[i]);
        if (config.trace_error && !results[i].error_trace.empty()) {
            std::ofstream tr(fs::path(config.output_dir) /
                             ("error_trace_" + std::to_string(i) + ".csv"));
            tr << "t,l1_error\n";
            for (const auto& rec : results[i].error_trace)
                tr << fmt17(rec.t) << ',' << fmt17(rec.l1_error) << '\n';
        }
    }
}

double convergence_from_summary_csv(const std::string& csv_text, std::size_t finest_count) {
    std::istringstream in(csv_text);
    std::string line;
    std::getline(in, line); // header
    std::vector<ErrorRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        if (cells.size() < 5) continue;
        ErrorRecord rec;
        rec.dx = std::strtod(cells[0].c_str(), nullptr);
        rec.dt = std::strtod(cells[1].c_str(), nullptr);
        rec.t = std::strtod(cells[3].c_str(), nullptr);
        rec.l1_error = std::strtod(cells[4].c_str(), nullptr);
        if (std::isfinite(rec.l1_error) && rec.l1_error > 0.0) records.push_back(rec);
    }
    std::sort(records.begin(), records.end(),
              [](const ErrorRecord& a, const ErrorRecord& b) { return a.dx < b.dx; });
    if (finest_count > 0 && records.size() > finest_count) records.resize(finest_count);
    return convergence_order(records);
}

bool example_cfl_static(const ExperimentConfig& config, double dx) {
    const bool neumann = config.preset == Preset::example2_neumann;
    BurgersSetup s = burgers_setup(config, dx, neumann);
    double boundary_sup = 0.0;
    if (!neumann) {
        // Dirichlet data is monotone in t for the tanh front; the sup
        // over the run sits at an endpoint.
        for (const auto* bc : {&s.scheme.left, &s.scheme.right}) {
            boundary_sup = std::max(boundary_sup, std::abs(bc->value_fn(0.0)));
            boundary_sup = std::max(boundary_sup, std::abs(bc->value_fn(config.target_t)));
        }
    }
    return cfl_static_estimate(s.initial, boundary_sup, dx, s.scheme.time_grid.dt);
}

ExperimentConfig config_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigInvalid(std::string("config: invalid JSON: ") + e.what());
    }
    ExperimentConfig cfg;
    try {
        if (j.contains("preset")) {
            const std::string p = j["preset"];
            if (p == "example1-dirichlet") cfg.preset = Preset::example1_dirichlet;
            else if (p == "example2-neumann") cfg.preset = Preset::example2_neumann;
            else if (p == "custom") cfg.preset = Preset::custom;
            else throw ConfigInvalid("config: unknown preset '" + p + "'");
        }
        if (j.contains("nu")) cfg.nu = j["nu"];
        if (j.contains("c")) cfg.c = j["c"];
        if (j.contains("dx_list")) cfg.dx_list = j["dx_list"].get<std::vector<double>>();
        if (j.contains("target_t")) cfg.target_t = j["target_t"];
        if (j.contains("weights")) {
            const std::string w = j["weights"];
            if (w == "boltzmann1") cfg.weights = WeightScheme::boltzmann1;
            else if (w == "boltzmann2") cfg.weights = WeightScheme::boltzmann2;
            else if (w == "naive") cfg.weights = WeightScheme::naive;
            else throw ConfigInvalid("config: unknown weights '" + w + "'");
        }
        if (j.contains("ghost")) {
            const std::string g = j["ghost"];
            if (g == "fd") cfg.ghost = GhostRule::fd;
            else if (g == "exp") cfg.ghost = GhostRule::exp;
            else throw ConfigInvalid("config: unknown ghost rule '" + g + "'");
        }
        if (j.contains("output_dir")) cfg.output_dir = j["output_dir"];
        if (j.contains("snap")) cfg.snap = j["snap"];
        if (j.contains("seed")) cfg.seed = j["seed"];
        if (j.contains("trace_error")) cfg.trace_error = j["trace_error"];
        if (j.contains("custom_force")) cfg.custom_force = j["custom_force"];
        if (j.contains("custom_bc")) cfg.custom_bc = j["custom_bc"];
        if (j.contains("custom_oracle")) cfg.custom_oracle = j["custom_oracle"];
    } catch (const nlohmann::json::exception& e) {
        throw ConfigInvalid(std::string("config: bad field type: ") + e.what());
    }
    if (cfg.dx_list.empty()) throw ConfigInvalid("config: dx_list must be non-empty");
    for (double dx : cfg.dx_list)
        if (!(dx > 0.0)) throw ConfigInvalid("config: dx values must be positive");
    if (!(cfg.nu > 0.0)) throw ConfigInvalid("config: nu must be positive");
    return cfg;
}

} // namespace dtrw
