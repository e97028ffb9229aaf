#include <doctest.h>

#include <random>

#include "dtrw/force.hpp"

using namespace dtrw;

namespace {
Lattice three_sites() { return make_lattice(0, 2, 1.0, Offset::node_centered); }
} // namespace

TEST_CASE("burgers force samples the field itself") {
    const ForceSpec spec = burgers_force(0.45);
    CHECK(spec.beta == doctest::Approx(5.0 / 9).epsilon(1e-15));
    Field f;
    f.values = {0.1, 0.5, 1.9};
    const auto fv = force_on_lattice(spec, three_sites(), 0.0, f);
    CHECK(fv == std::vector<double>{0.1, 0.5, 1.9});
}

TEST_CASE("zero force and prescribed identity") {
    Field f;
    f.values = {2.0, 4.0, 8.0};
    CHECK(force_on_lattice(zero_force(), three_sites(), 1.0, f) ==
          std::vector<double>{0.0, 0.0, 0.0});

    ForceSpec identity;
    identity.kind = ForceKind::prescribed;
    identity.evaluate = [](double x, double, double) { return x; };
    CHECK(force_on_lattice(identity, three_sites(), 0.0, f) ==
          std::vector<double>{0.0, 1.0, 2.0});
}

TEST_CASE("non-finite force is rejected") {
    ForceSpec bad;
    bad.evaluate = [](double, double, double) { return std::nan(""); };
    Field f;
    f.values = {0, 0, 0};
    CHECK_THROWS_AS(force_on_lattice(bad, three_sites(), 0.0, f), NonFiniteForce);
}

TEST_CASE("potential increments") {
    const std::vector<double> constant{1, 1, 1};
    CHECK(potential_increment(constant, 1, Direction::right, 0.5, QuadratureRule::two_point) ==
          doctest::Approx(0.5).epsilon(1e-15));

    const std::vector<double> ramp{0, 2, 4};
    CHECK(potential_increment(ramp, 1, Direction::right, 1.0, QuadratureRule::two_point) ==
          doctest::Approx(3.0).epsilon(1e-15));
    CHECK(potential_increment(ramp, 1, Direction::right, 1.0, QuadratureRule::single_point) ==
          doctest::Approx(2.0).epsilon(1e-15));
    CHECK(potential_increment(ramp, 1, Direction::left, 1.0, QuadratureRule::two_point) ==
          doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(potential_increment(ramp, 2, Direction::right, 1.0, QuadratureRule::two_point),
                    StencilOutOfRange);
    CHECK_THROWS_AS(potential_increment(ramp, 0, Direction::left, 1.0, QuadratureRule::two_point),
                    StencilOutOfRange);
}

TEST_CASE("increments are linear in the force and scale with dx") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int k = 0; k < 200; ++k) {
        std::vector<double> a{u(rng), u(rng), u(rng)};
        std::vector<double> b{u(rng), u(rng), u(rng)};
        const double s = u(rng);
        std::vector<double> combo(3);
        for (int i = 0; i < 3; ++i) combo[i] = a[i] + s * b[i];
        for (auto rule : {QuadratureRule::single_point, QuadratureRule::two_point}) {
            const double lhs = potential_increment(combo, 1, Direction::right, 0.7, rule);
            const double rhs = potential_increment(a, 1, Direction::right, 0.7, rule) +
                               s * potential_increment(b, 1, Direction::right, 0.7, rule);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
    // constant force: halving dx halves the increment exactly
    const std::vector<double> c{3.0, 3.0, 3.0};
    for (auto rule : {QuadratureRule::single_point, QuadratureRule::two_point}) {
        CHECK(potential_increment(c, 1, Direction::right, 0.5, rule) ==
              0.5 * potential_increment(c, 1, Direction::right, 1.0, rule));
    }
}
