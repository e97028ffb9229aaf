#include <doctest.h>

#include <cmath>
#include <random>

#include "dtrw/weights.hpp"

using namespace dtrw;

TEST_CASE("boltzmann single-point") {
    const std::vector<double> zero{0.0};
    CHECK(boltzmann_single(zero, 0, 1.0, 1.0) == 0.5);

    const std::vector<double> f{2.0};
    CHECK(boltzmann_single(f, 0, 0.1, 0.5) ==
          doctest::Approx(1.0 / (1.0 + std::exp(-0.2))).epsilon(1e-15));

    // bounded for huge dx
    const std::vector<double> one{1.0};
    const double p = boltzmann_single(one, 0, 1000.0, 1.0);
    CHECK(p > 0.99);
    CHECK(p <= 1.0);
}

TEST_CASE("boltzmann two-point") {
    const std::vector<double> zero{0, 0, 0};
    CHECK(boltzmann_two_point(zero, 1, 1.0, 1.0) == 0.5);

    const std::vector<double> c{3.0, 3.0, 3.0};
    CHECK(boltzmann_two_point(c, 1, 0.7, 0.9) ==
          doctest::Approx(boltzmann_single(c, 1, 0.7, 0.9)).epsilon(1e-15));

    const std::vector<double> ramp{0, 2, 4};
    CHECK(boltzmann_two_point(ramp, 1, 1.0, 0.5) ==
          doctest::Approx(1.0 / (1.0 + std::exp(-2.0))).epsilon(1e-14));

    CHECK_THROWS_AS(boltzmann_two_point(ramp, 0, 1.0, 0.5), StencilOutOfRange);
}

TEST_CASE("naive linear weight errors instead of clamping") {
    const std::vector<double> zero{0.0};
    CHECK(naive_linear(zero, 0, 1.0, 1.0) == 0.5);

    const std::vector<double> f{2.0};
    CHECK(naive_linear(f, 0, 0.1, 0.5) == doctest::Approx(0.55).epsilon(1e-15));

    const std::vector<double> one{1.0};
    CHECK_THROWS_AS(naive_linear(one, 0, 3.0, 1.0), ProbabilityOutOfRange);
}

TEST_CASE("build_jump_probabilities") {
    const Lattice lat = make_lattice(0, 4, 1.0, Offset::node_centered);
    const std::vector<double> zero(lat.n_sites, 0.0);
    std::vector<QuadratureRule> rules(lat.n_sites, QuadratureRule::single_point);
    rules[1] = rules[2] = rules[3] = QuadratureRule::two_point;

    auto probs = build_jump_probabilities(zero, lat, lat.dx, 1.0, rules);
    for (int i = 0; i < lat.n_sites; ++i) {
        CHECK(probs.p_right[i] == 0.5);
        CHECK(probs.p_right[i] + probs.p_left[i] == doctest::Approx(1.0).epsilon(1e-15));
    }

    // constant Burgers field reduces two-point to the single-point value
    const Lattice b = make_lattice(0, 100, 1.0 / 3, Offset::node_centered);
    const std::vector<double> ones(b.n_sites, 1.0);
    std::vector<QuadratureRule> brules(b.n_sites, QuadratureRule::two_point);
    brules.front() = brules.back() = QuadratureRule::single_point;
    const double beta = 5.0 / 9;
    auto bp = build_jump_probabilities(ones, b, b.dx, beta, brules);
    const double expected = 1.0 / (1.0 + std::exp(-2.0 * beta / 3.0));
    CHECK(expected == doctest::Approx(0.5915485).epsilon(1e-6));
    for (int i = 0; i < b.n_sites; ++i)
        CHECK(bp.p_right[i] == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("boltzmann probabilities stay in (0,1) with odd symmetry") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> logu(-6.0, 6.0);
    std::uniform_real_distribution<double> fv(-50.0, 50.0);
    for (int k = 0; k < 2000; ++k) {
        const double beta = std::pow(10.0, logu(rng) / 3.0);
        const double dx = std::pow(10.0, logu(rng));
        const double f = fv(rng);
        const std::vector<double> plus{f};
        const std::vector<double> minus{-f};
        const double p = boltzmann_single(plus, 0, dx, beta);
        const double q = boltzmann_single(minus, 0, dx, beta);
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
        CHECK(p + q == doctest::Approx(1.0).epsilon(1e-12));
        if (std::abs(2.0 * beta * dx * f) < 700.0) {
            CHECK(p > 0.0);
            CHECK(p < 1.0);
        }
    }
}

TEST_CASE("naive agrees with boltzmann to third order in the exponent") {
    const double beta = 0.8, f = 1.3;
    for (double dx : {1e-2, 1e-3, 1e-4}) {
        const std::vector<double> fv{f};
        const double arg = beta * f * dx;
        const double diff =
            std::abs(naive_linear(fv, 0, dx, beta) - boltzmann_single(fv, 0, dx, beta));
        CHECK(diff <= std::abs(arg * arg * arg)); // |tanh(a)/2 - a/2| <= a^3/6
    }
}
