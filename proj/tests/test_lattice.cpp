#include <doctest.h>

#include <random>

#include "dtrw/lattice.hpp"

using namespace dtrw;

TEST_CASE("make_lattice derives site counts from the offset rule") {
    // 100 / (25/3) = 12 intervals
    CHECK(make_lattice(0, 100, 25.0 / 3, Offset::node_centered).n_sites == 13);
    CHECK(make_lattice(0, 100, 1.0 / 3, Offset::node_centered).n_sites == 301);

    const Lattice cell = make_lattice(0, 100, 1.0 / 3, Offset::cell_centered);
    CHECK(cell.n_sites == 300);
    CHECK(cell.site(0) == doctest::Approx(0.5 / 3.0).epsilon(1e-14));
    CHECK(cell.site(299) == doctest::Approx(100.0 - 0.5 / 3.0).epsilon(1e-14));
}

TEST_CASE("make_lattice rejects non-commensurate spacing") {
    CHECK_THROWS_AS(make_lattice(0, 1, 0.3, Offset::node_centered), NonCommensurateDomain);
    CHECK_THROWS_AS(make_lattice(0, 100, 7.0, Offset::cell_centered), NonCommensurateDomain);
}

TEST_CASE("lattice coordinates are uniformly increasing") {
    const Lattice lat = make_lattice(-2, 3, 0.25, Offset::node_centered);
    for (int i = 1; i < lat.n_sites; ++i) {
        CHECK(lat.site(i) > lat.site(i - 1));
        CHECK(lat.site(i) - lat.site(i - 1) == doctest::Approx(lat.dx).epsilon(1e-13));
    }
}

TEST_CASE("time_step_for pins dt to dx^2/(2D)") {
    CHECK(time_step_for(1.0 / 3, 0.45) == doctest::Approx(10.0 / 81).epsilon(1e-15));
    CHECK(time_step_for(25.0 / 3, 0.45) == doctest::Approx(6250.0 / 81).epsilon(1e-15));
    CHECK(time_step_for(1.0, 0.5) == 1.0);
}

TEST_CASE("dt * 2D recovers dx^2 to ulp scale") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.01, 10.0);
    for (int k = 0; k < 1000; ++k) {
        const double dx = u(rng);
        const double d = u(rng);
        const double dt = time_step_for(dx, d);
        CHECK(std::abs(dt * 2.0 * d - dx * dx) <= 1e-15 * dx * dx);
    }
}

TEST_CASE("steps_to_time") {
    CHECK(steps_to_time(6250.0 / 81, 10.0 / 81, false) == 625);
    CHECK(steps_to_time(6250.0 / 81, 6250.0 / 81, false) == 1);
    CHECK_THROWS_AS(steps_to_time(1.0, 0.3, false), TimeNotReachable);

    double realized = -1.0;
    CHECK(steps_to_time(1.0, 0.3, true, &realized) == 3);
    CHECK(realized == doctest::Approx(0.9).epsilon(1e-15));
}

TEST_CASE("steps_to_time succeeds exactly on integer multiples") {
    const double dt = 0.125;
    for (long n = 0; n <= 50; ++n) CHECK(steps_to_time(n * dt, dt, false) == n);
}

TEST_CASE("signed field difference") {
    SignedField sf;
    sf.plus.values = {1.0, 0.0, 3.0};
    sf.minus.values = {0.0, 2.0, 1.0};
    const auto d = sf.difference();
    CHECK(d == std::vector<double>{1.0, -2.0, 2.0});
}
