#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qwre/annealed.hpp"
#include "qwre/errors.hpp"
#include "qwre/io.hpp"
#include "test_support.hpp"

using namespace qwre;

TEST_CASE("distribution CSV round-trips bit-exactly") {
    test::Rng rng(11);
    const Environment env = test::random_environment(rng, 9);
    const Distribution dist = evolve_to(symmetric_initial_qubit(), env, 9);

    std::ostringstream out;
    emit_distribution_csv(out, dist);
    std::istringstream in(out.str());
    const Distribution parsed = parse_distribution_csv(in);

    CHECK(parsed.time == dist.time);
    REQUIRE(parsed.mass.size() == dist.mass.size());
    for (const auto& [x, p] : dist.mass) {
        REQUIRE(parsed.mass.count(x) == 1);
        CHECK(parsed.mass.at(x) == p);  // full-precision round trip
    }

    std::ostringstream again;
    emit_distribution_csv(again, dist);
    CHECK(again.str() == out.str());  // byte-stable
}

TEST_CASE("distribution CSV rejects malformed input") {
    std::istringstream missing_header("1,0.5\n");
    CHECK_THROWS_AS(parse_distribution_csv(missing_header), config_error);
    std::istringstream bad_row("position,probability\nnot-a-row\n");
    CHECK_THROWS_AS(parse_distribution_csv(bad_row), config_error);
}

TEST_CASE("density CSV carries moment headers and the grid") {
    std::ostringstream out;
    emit_density_csv(out, quenched_limit_density(0.0), 5);
    const std::string text = out.str();
    CHECK(text.find("# mean,0\n") != std::string::npos);
    CHECK(text.find("# variance,0.29289321881345243\n") != std::string::npos);
    CHECK(text.find("x,density\n") != std::string::npos);
    // Midpoint of the 5-point grid is x = 0, density 1/pi.
    CHECK(text.find("0," + format_double(1.0 / M_PI)) != std::string::npos);
    CHECK_THROWS_AS(emit_density_csv(out, quenched_limit_density(0.0), 1), config_error);
}

TEST_CASE("convergence CSV schema") {
    ConvergenceReport report;
    report.n_values = {10, 20};
    report.ks_distances = {0.5, 0.25};
    report.empirical_means = {0.0, -0.125};
    report.empirical_variances = {0.0625, 0.5};
    std::ostringstream out;
    emit_convergence_csv(out, report);
    CHECK(out.str() == "n,ks,mean,variance\n10,0.5,0,0.0625\n20,0.25,-0.125,0.5\n");
}

TEST_CASE("environment files parse every measure kind") {
    const std::string text = R"({
        "seed": 42,
        "default_measure": {"kind": "uniform", "lo": -3.141592653589793, "hi": 3.141592653589793},
        "sites": {
            "0": {"kind": "delta", "value": 0.5235987755982988},
            "-3": 1.25,
            "5": {"kind": "two_point", "theta": 0.7},
            "7": {"kind": "discrete", "values": [-0.4, 0.4], "weights": [0.5, 0.5]}
        }
    })";
    const EnvironmentFile file = environment_file_from_json(text);
    CHECK(file.seed == 42);
    CHECK(file.spec.default_measure.kind() == PhaseMeasure::Kind::Uniform);
    CHECK(file.spec.measure_at(0).kind() == PhaseMeasure::Kind::Delta);
    CHECK(file.spec.measure_at(0).value() == 0.5235987755982988);
    CHECK(file.spec.measure_at(-3).kind() == PhaseMeasure::Kind::Delta);
    CHECK(file.spec.measure_at(-3).value() == 1.25);
    CHECK(file.spec.measure_at(5).kind() == PhaseMeasure::Kind::TwoPoint);
    CHECK(file.spec.measure_at(7).kind() == PhaseMeasure::Kind::Discrete);
    CHECK(file.spec.measure_at(100).kind() == PhaseMeasure::Kind::Uniform);

    const Environment env = sample_environment(file.spec, 8, file.seed);
    CHECK(env.phase(0) == 0.5235987755982988);
    CHECK(env.phase(-3) == 1.25);
}

TEST_CASE("environment files survive a JSON round trip") {
    EnvironmentFile file;
    file.seed = 7;
    file.spec.default_measure = PhaseMeasure::two_point(1.1);
    file.spec.per_site.emplace(-2, PhaseMeasure::uniform(0.0, 1.0));
    file.spec.per_site.emplace(4, PhaseMeasure::delta(0.25));
    const EnvironmentFile parsed = environment_file_from_json(environment_file_to_json(file));
    CHECK(parsed.seed == 7);
    CHECK(parsed.spec.default_measure.kind() == PhaseMeasure::Kind::TwoPoint);
    CHECK(parsed.spec.default_measure.theta() == 1.1);
    CHECK(parsed.spec.measure_at(-2).lo() == 0.0);
    CHECK(parsed.spec.measure_at(4).value() == 0.25);
}

TEST_CASE("environment file errors") {
    CHECK_THROWS_AS(environment_file_from_json("not json"), config_error);
    CHECK_THROWS_AS(environment_file_from_json(R"({"default_measure": {"kind": "cauchy"}})"),
                    config_error);
    CHECK_THROWS_AS(environment_file_from_json(R"({"sites": {"abc": 0.0}})"), config_error);
    CHECK_THROWS_AS(
        environment_file_from_json(R"({"default_measure": {"kind": "uniform", "lo": 2, "hi": 1}})"),
        config_error);
    CHECK_THROWS_AS(load_environment_file("/nonexistent/env.json"), config_error);
}

TEST_CASE("qubit parsing") {
    const ChiralityVector phi = parse_qubit("0.70710678118654752,0,0,0.70710678118654752");
    CHECK(phi.left.real() == doctest::Approx(M_SQRT1_2).epsilon(1e-15));
    CHECK(phi.right.imag() == doctest::Approx(M_SQRT1_2).epsilon(1e-15));
    CHECK_NOTHROW(parse_qubit("0.6,0,0,0.8"));
    CHECK_THROWS_AS(parse_qubit("1,0,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_qubit("1,0,0,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_qubit("1,0,1,0"), std::invalid_argument);
}

TEST_CASE("annealed averaging helpers") {
    const ChiralityVector phi = symmetric_initial_qubit();
    SUBCASE("two-point measures recover the symmetric table exactly") {
        const Distribution dist =
            annealed_distribution_exact(PhaseMeasure::two_point(1.0), 4, phi);
        CHECK(std::abs(dist.at(-4) - 1.0 / 16) <= 1e-13);
        CHECK(std::abs(dist.at(-2) - 6.0 / 16) <= 1e-13);
        CHECK(std::abs(dist.at(0) - 2.0 / 16) <= 1e-13);
        CHECK(std::abs(dist.at(2) - 6.0 / 16) <= 1e-13);
        CHECK(std::abs(dist.at(4) - 1.0 / 16) <= 1e-13);
    }
    SUBCASE("uniform measures shift by the mean of sin") {
        const Distribution dist =
            annealed_distribution_exact(PhaseMeasure::uniform(0.0, M_PI), 4, phi);
        const double mean_sin = 2.0 / M_PI;
        CHECK(std::abs(dist.at(-4) - (1.0 + mean_sin) / 16) <= 1e-13);
        CHECK(std::abs(dist.at(4) - (1.0 - mean_sin) / 16) <= 1e-13);
    }
    SUBCASE("monte carlo honors its seed and tracks the exact average") {
        EnvironmentSpec spec;
        spec.default_measure = PhaseMeasure::two_point(0.9);
        const McDistribution a = annealed_distribution_mc(spec, 4, 2000, 5, phi);
        const McDistribution b = annealed_distribution_mc(spec, 4, 2000, 5, phi);
        for (const auto& [x, p] : a.mean.mass) CHECK(b.mean.at(x) == p);
        const Distribution exact =
            annealed_distribution_exact(PhaseMeasure::two_point(0.9), 4, phi);
        for (const auto& [x, p] : exact.mass) {
            CHECK(std::abs(a.mean.at(x) - p) <= 3.0 * a.std_error.at(x) + 1e-12);
        }
    }
    SUBCASE("argument validation") {
        EnvironmentSpec spec;
        CHECK_THROWS_AS(annealed_distribution_mc(spec, 4, 1, 0, phi), std::invalid_argument);
        CHECK_THROWS_AS(annealed_distribution_exact(PhaseMeasure::delta(0.0), -1, phi),
                        std::invalid_argument);
    }
}
