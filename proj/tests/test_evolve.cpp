#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qwre/evolve.hpp"
#include "qwre/pathsum.hpp"
#include "test_support.hpp"

using namespace qwre;

TEST_CASE("initial state") {
    const ChiralityVector phi = symmetric_initial_qubit();
    const WalkState state = initial_state(phi);
    CHECK(state.time() == 0);
    CHECK(std::abs(state.amplitude(0).left - phi.left) == 0.0);
    CHECK(std::abs(state.amplitude(0).right - phi.right) == 0.0);
    CHECK(state.amplitude(2).norm_sq() == 0.0);

    CHECK_NOTHROW(initial_state({cplx(1.0, 0.0), cplx(0.0, 0.0)}));
    CHECK_NOTHROW(initial_state({cplx(0.6, 0.0), cplx(0.0, 0.8)}));
    CHECK_THROWS_AS(initial_state({cplx(1.0, 0.0), cplx(1.0, 0.0)}), std::invalid_argument);
}

TEST_CASE("one step splits mass by sin(omega_0)") {
    test::Rng rng(1);
    const ChiralityVector phi = symmetric_initial_qubit();
    for (int trial = 0; trial < 20; ++trial) {
        const Environment env = test::random_environment(rng, 2);
        const double s = std::sin(env.phase(0));
        const Distribution dist = distribution(step(initial_state(phi), env));
        CHECK(dist.at(-1) == doctest::Approx((1 + s) / 2).epsilon(1e-12));
        CHECK(dist.at(1) == doctest::Approx((1 - s) / 2).epsilon(1e-12));
    }
}

TEST_CASE("four-step quenched values") {
    const ChiralityVector phi = symmetric_initial_qubit();
    test::Rng rng(2);

    SUBCASE("leftmost point carries (1+sin)/16") {
        for (int trial = 0; trial < 10; ++trial) {
            const Environment env = test::random_environment(rng, 5);
            const Distribution dist = evolve_to(phi, env, 4);
            CHECK(dist.at(-4) ==
                  doctest::Approx((1 + std::sin(env.phase(0))) / 16).epsilon(1e-12));
        }
    }
    SUBCASE("omega_0 = pi/6 five-point table") {
        Environment env = test::random_environment(rng, 5);
        env.set_phase(0, M_PI / 6);
        const Distribution dist = evolve_to(phi, env, 4);
        CHECK(dist.at(-4) == doctest::Approx(1.5 / 16).epsilon(1e-12));
        CHECK(dist.at(-2) == doctest::Approx(8.0 / 16).epsilon(1e-12));
        CHECK(dist.at(0) == doctest::Approx(2.0 / 16).epsilon(1e-12));
        CHECK(dist.at(2) == doctest::Approx(4.0 / 16).epsilon(1e-12));
        CHECK(dist.at(4) == doctest::Approx(0.5 / 16).epsilon(1e-12));
    }
    SUBCASE("omega_0 = pi/2 empties the rightmost point") {
        Environment env = test::random_environment(rng, 5);
        env.set_phase(0, M_PI / 2);
        const Distribution dist = evolve_to(phi, env, 4);
        CHECK(dist.at(-4) == doctest::Approx(2.0 / 16).epsilon(1e-12));
        CHECK(dist.at(-2) == doctest::Approx(10.0 / 16).epsilon(1e-12));
        CHECK(dist.at(0) == doctest::Approx(2.0 / 16).epsilon(1e-12));
        CHECK(dist.at(2) == doctest::Approx(2.0 / 16).epsilon(1e-12));
        CHECK(dist.at(4) == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("zero-phase walk is symmetric from the symmetric qubit") {
    const Environment env(0.0);
    WalkState state = initial_state(symmetric_initial_qubit());
    for (int n = 1; n <= 60; ++n) {
        state = step(state, env);
        const Distribution dist = distribution(state);
        for (const auto& [x, p] : dist.mass) {
            CHECK(std::abs(p - dist.at(-x)) <= 1e-12);
        }
    }
    const Distribution big = evolve_to(symmetric_initial_qubit(), env, 500);
    for (const auto& [x, p] : big.mass) CHECK(std::abs(p - big.at(-x)) <= 1e-12);
}

TEST_CASE("distribution basics and evolve_to edge cases") {
    const ChiralityVector phi = symmetric_initial_qubit();
    const Distribution start = distribution(initial_state(phi));
    CHECK(start.time == 0);
    CHECK(start.at(0) == doctest::Approx(1.0).epsilon(1e-12));

    const Distribution same = evolve_to(phi, Environment(0.3), 0);
    CHECK(same.at(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS(evolve_to(phi, Environment(0.0), -1), std::invalid_argument);
}

TEST_CASE("support parity: off-parity amplitudes are exactly zero") {
    test::Rng rng(3);
    const Environment env = test::random_environment(rng, 12);
    WalkState state = initial_state(symmetric_initial_qubit());
    for (int n = 1; n <= 11; ++n) {
        state = step(state, env);
        for (int x = -n; x <= n; ++x) {
            if ((x - n) % 2 != 0) CHECK(state.amplitude(x).norm_sq() == 0.0);
        }
        const Distribution dist = distribution(state);
        for (const auto& [x, p] : dist.mass) CHECK((x - n) % 2 == 0);
        CHECK(dist.mass.size() == static_cast<std::size_t>(n) + 1);
    }
}

TEST_CASE("norm is preserved without renormalization") {
    test::Rng rng(4);
    const Environment env = test::random_environment(rng, 1000);
    WalkState state = initial_state(symmetric_initial_qubit());
    for (int n = 0; n < 1000; ++n) state = step(state, env);
    CHECK(std::abs(state.norm_sq() - 1.0) <= 1e-10);
}

TEST_CASE("long-run norm drift stays below 1e-9") {
    // 10^4 steps in a disordered environment; evolve_to asserts the drift.
    test::Rng rng(5);
    Environment env(0.0);
    for (int x = -10000; x <= 10000; x += 7) env.set_phase(x, rng.angle());
    const Distribution dist = evolve_to(symmetric_initial_qubit(), env, 10000);
    CHECK(dist.total() == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("state evolution matches the path-sum oracle") {
    test::Rng rng(6);
    const ChiralityVector phi = symmetric_initial_qubit();
    for (int trial = 0; trial < 20; ++trial) {
        const Environment env = test::random_environment(rng, 10);
        for (int n = 1; n <= 10; ++n) {
            const Distribution evolved = evolve_to(phi, env, n);
            const Distribution oracle = oracle_distribution(env, n, phi);
            for (const auto& [x, p] : oracle.mass) {
                CHECK(std::abs(evolved.at(x) - p) <= 1e-10);
            }
        }
    }
}

TEST_CASE("distributions depend on the environment only through omega_0") {
    test::Rng rng(7);
    const ChiralityVector phi = symmetric_initial_qubit();
    Environment first = test::random_environment(rng, 500);
    first.set_phase(0, 0.8);
    const Distribution base = evolve_to(phi, first, 500);
    for (int trial = 0; trial < 3; ++trial) {
        Environment other = test::random_environment(rng, 500);
        other.set_phase(0, 0.8);
        const Distribution dist = evolve_to(phi, other, 500);
        for (const auto& [x, p] : base.mass) CHECK(std::abs(dist.at(x) - p) <= 1e-12);
    }
}

TEST_CASE("characteristic function") {
    const ChiralityVector phi = symmetric_initial_qubit();
    const Environment env(0.0);
    const Distribution dist = evolve_to(phi, env, 4);

    CHECK(std::abs(characteristic_function(dist, 0.0) - cplx(1.0)) <= 1e-14);
    // Direct sum over the five-point table.
    cplx expected{};
    for (const auto& [x, p] : dist.mass) expected += p * std::polar(1.0, M_PI * x / 4.0);
    CHECK(std::abs(characteristic_function(dist, M_PI) - expected) <= 1e-14);
    CHECK(std::abs(characteristic_function(dist, M_PI).imag()) <= 1e-12);  // symmetric law

    const Distribution trivial = distribution(initial_state(phi));
    CHECK(std::abs(characteristic_function(trivial, 3.7) - cplx(1.0)) <= 1e-14);
}
