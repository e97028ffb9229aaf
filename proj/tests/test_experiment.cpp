#include <doctest.h>

#include <cmath>

#include "dtrw/experiment.hpp"

using namespace dtrw;

TEST_CASE("coarsest ladder spacing reaches the target in one step") {
    ExperimentConfig cfg;
    cfg.dx_list = {25.0 / 3};
    const auto results = run_example1(cfg);
    REQUIRE(results.size() == 1);
    CHECK(results[0].ok);
    CHECK(results[0].n_steps == 1);
    CHECK(results[0].realized_t == doctest::Approx(6250.0 / 81).epsilon(1e-14));
}

TEST_CASE("example1 at dx=1/3 takes 625 steps and beats the coarse run") {
    ExperimentConfig cfg;
    cfg.dx_list = {1.0 / 3, 25.0 / 12};
    const auto results = run_example1(cfg);
    REQUIRE(results.size() == 2);
    REQUIRE(results[0].ok);
    REQUIRE(results[1].ok);
    CHECK(results[0].n_steps == 625);
    CHECK(*results[0].l1 < *results[1].l1);
}

TEST_CASE("summary CSV is deterministic") {
    ExperimentConfig cfg;
    cfg.dx_list = {25.0 / 3, 25.0 / 12};
    const auto a = summary_csv(run_example1(cfg));
    const auto b = summary_csv(run_example1(cfg));
    CHECK(a == b);
    CHECK(a.find("dx,dt,n_steps,realized_t,l1_error") == 0);
}

TEST_CASE("custom zero-flux diffusion conserves mass") {
    ExperimentConfig cfg;
    cfg.preset = Preset::custom;
    cfg.custom_force = "diffusion";
    cfg.custom_bc = "zero-flux";
    cfg.dx_list = {0.5};
    cfg.target_t = 0.0;
    cfg.snap = true;
    cfg.target_t = 50.0 * time_step_for(0.5, cfg.nu);
    const auto results = run_custom(cfg);
    REQUIRE(results.size() == 1);
    REQUIRE(results[0].ok);
    const auto& trace = results[0].report.mass_trace;
    for (double m : trace)
        CHECK(std::abs(m - trace.front()) <= 1e-12 * trace.front());
}

TEST_CASE("naive weights abort once the boundary data grows") {
    ExperimentConfig cfg;
    cfg.weights = WeightScheme::naive;
    cfg.dx_list = {25.0 / 12};
    const auto results = run_example1(cfg);
    REQUIRE(results.size() == 1);
    CHECK_FALSE(results[0].ok);
    CHECK(results[0].error.find("naive") != std::string::npos);
}

TEST_CASE("static CFL classification on the ladder") {
    ExperimentConfig cfg;
    CHECK(example_cfl_static(cfg, 25.0 / 3));
    CHECK(example_cfl_static(cfg, 25.0 / 48));
    CHECK_FALSE(example_cfl_static(cfg, 1.0 / 3));
    CHECK_FALSE(example_cfl_static(cfg, 1.0 / 12));
}

TEST_CASE("config JSON parsing") {
    const auto cfg = config_from_json(R"({
        "preset": "example2-neumann",
        "nu": 0.3,
        "dx_list": [0.25, 0.125],
        "ghost": "fd",
        "weights": "boltzmann1",
        "snap": true
    })");
    CHECK(cfg.preset == Preset::example2_neumann);
    CHECK(cfg.nu == 0.3);
    CHECK(cfg.dx_list == std::vector<double>{0.25, 0.125});
    CHECK(cfg.ghost == GhostRule::fd);
    CHECK(cfg.weights == WeightScheme::boltzmann1);
    CHECK(cfg.snap);

    CHECK_THROWS_AS(config_from_json("not json"), ConfigInvalid);
    CHECK_THROWS_AS(config_from_json(R"({"dx_list": []})"), ConfigInvalid);
    CHECK_THROWS_AS(config_from_json(R"({"weights": "magic"})"), ConfigInvalid);
}

TEST_CASE("convergence slope from a summary CSV") {
    std::string csv = "dx,dt,n_steps,realized_t,l1_error,mass_initial,mass_final,"
                      "cfl_violated,prob_min,prob_max,fallback_events\n";
    for (double dx : {0.4, 0.2, 0.1, 0.05, 0.025})
        csv += std::to_string(dx) + ",0,1,1," + std::to_string(dx * dx) +
               ",0,0,false,0.4,0.6,0\n";
    CHECK(convergence_from_summary_csv(csv, 4) == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("solution CSV naming is deterministic") {
    CHECK(solution_csv_name(Preset::example1_dirichlet, 0) == "solution_example1_0.csv");
    CHECK(solution_csv_name(Preset::example2_neumann, 3) == "solution_example2_3.csv");
}

TEST_CASE("example2 ghost rules agree closely at moderate resolution") {
    ExperimentConfig cfg;
    cfg.preset = Preset::example2_neumann;
    cfg.dx_list = {1.0 / 3};
    cfg.ghost = GhostRule::exp;
    const auto exp_run = run_example2(cfg);
    cfg.ghost = GhostRule::fd;
    const auto fd_run = run_example2(cfg);
    REQUIRE(exp_run[0].ok);
    REQUIRE(fd_run[0].ok);
    CHECK(exp_run[0].report.fallback_count() == 0);
    CHECK(std::abs(*exp_run[0].l1 - *fd_run[0].l1) <= 0.1 * std::max(*exp_run[0].l1, *fd_run[0].l1));
}
