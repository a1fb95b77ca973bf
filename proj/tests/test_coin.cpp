#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "qwre/coin.hpp"
#include "test_support.hpp"

using namespace qwre;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_close(const cplx& got, const cplx& want, double tol = 1e-12) {
    CHECK(std::abs(got - want) <= tol);
}
}  // namespace

TEST_CASE("phase coin special values") {
    SUBCASE("omega = 0 is the Hadamard gate") {
        const Coin h = coin_from_phase(0.0);
        check_close(h.a, kInvSqrt2);
        check_close(h.b, kInvSqrt2);
        check_close(h.c, kInvSqrt2);
        check_close(h.d, -kInvSqrt2);
    }
    SUBCASE("omega = pi/2") {
        const Coin c = coin_from_phase(M_PI / 2);
        check_close(c.a, cplx(0.0, kInvSqrt2));
        check_close(c.b, kInvSqrt2);
        check_close(c.c, kInvSqrt2);
        check_close(c.d, cplx(0.0, kInvSqrt2));
    }
    SUBCASE("omega = pi") {
        const Coin c = coin_from_phase(M_PI);
        check_close(c.a, -kInvSqrt2);
        check_close(c.b, kInvSqrt2);
        check_close(c.c, kInvSqrt2);
        check_close(c.d, kInvSqrt2);
    }
}

TEST_CASE("phase coin rejects non-finite omega") {
    CHECK_THROWS_AS(coin_from_phase(std::numeric_limits<double>::quiet_NaN()),
                    std::invalid_argument);
    CHECK_THROWS_AS(coin_from_phase(std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
}

TEST_CASE("unitarity relations hold across the phase family") {
    test::Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        const double omega = rng.angle() * 3.0;
        CAPTURE(omega);
        CHECK(is_unitary_coin(coin_from_phase(omega)));
    }
}

TEST_CASE("periodicity in omega") {
    test::Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        const double omega = rng.angle();
        const Coin lhs = coin_from_phase(omega);
        const Coin rhs = coin_from_phase(omega + 2.0 * M_PI);
        check_close(lhs.a, rhs.a);
        check_close(lhs.b, rhs.b);
        check_close(lhs.c, rhs.c);
        check_close(lhs.d, rhs.d);
    }
}

TEST_CASE("general constructor validates unitarity") {
    test::Rng rng(77);
    for (int i = 0; i < 20; ++i) {
        CHECK(is_unitary_coin(test::random_unitary_coin(rng)));
    }
    CHECK_THROWS_AS(Coin::from_entries(0.5, 0.5, 0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(Coin::from_entries(1.0, 0.0, 0.0, 2.0), std::invalid_argument);
    // Right orthogonality relations but the wrong determinant pairing.
    CHECK_THROWS_AS(Coin::from_entries(kInvSqrt2, kInvSqrt2, kInvSqrt2, kInvSqrt2),
                    std::invalid_argument);
}

TEST_CASE("P/Q and R/S block extraction") {
    const Coin h = coin_from_phase(0.0);
    const auto [p, q] = split_pq(h);
    check_close(p.m00, kInvSqrt2);
    check_close(p.m01, kInvSqrt2);
    check_close(p.m10, 0.0);
    check_close(q.m10, kInvSqrt2);
    check_close(q.m11, -kInvSqrt2);
    check_close(q.m00, 0.0);

    const auto [r, s] = split_rs(h);
    check_close(r.m00, kInvSqrt2);
    check_close(r.m01, -kInvSqrt2);
    check_close(s.m10, kInvSqrt2);
    check_close(s.m11, kInvSqrt2);

    const auto [p2, q2] = split_pq(coin_from_phase(M_PI / 2));
    check_close(p2.m00, cplx(0.0, kInvSqrt2));
    check_close(p2.m01, kInvSqrt2);

    test::Rng rng(9);
    for (int i = 0; i < 20; ++i) {
        const Coin coin = coin_from_phase(rng.angle());
        const auto [pp, qq] = split_pq(coin);
        CHECK(max_abs_diff(pp + qq, coin.matrix()) == 0.0);
    }
}

TEST_CASE("PQRS blocks are trace-orthonormal") {
    const auto check_orthonormal = [](const Coin& coin) {
        const auto [p, q] = split_pq(coin);
        const auto [r, s] = split_rs(coin);
        const Mat2 blocks[4] = {p, q, r, s};
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                const cplx inner = trace_inner(blocks[i], blocks[j]);
                check_close(inner, i == j ? cplx(1.0) : cplx(0.0));
            }
        }
    };
    check_orthonormal(coin_from_phase(0.0));
    test::Rng rng(13);
    for (int i = 0; i < 100; ++i) check_orthonormal(coin_from_phase(rng.angle()));
    for (int i = 0; i < 20; ++i) check_orthonormal(test::random_unitary_coin(rng));
}
