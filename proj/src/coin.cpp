#include "qwre/coin.hpp"

#include <cmath>
#include <stdexcept>

namespace qwre {

namespace {
constexpr double kUnitarityTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}  // namespace

bool is_unitary_coin(const Coin& coin, double tol) {
    const cplx det = coin.det();
    return std::abs(std::norm(coin.a) + std::norm(coin.c) - 1.0) <= tol &&
           std::abs(std::norm(coin.b) + std::norm(coin.d) - 1.0) <= tol &&
           std::abs(coin.a * std::conj(coin.c) + coin.b * std::conj(coin.d)) <= tol &&
           std::abs(std::abs(det) - 1.0) <= tol &&
           std::abs(coin.c + det * std::conj(coin.b)) <= tol &&
           std::abs(coin.d - det * std::conj(coin.a)) <= tol;
}

Coin Coin::from_entries(cplx a, cplx b, cplx c, cplx d) {
    Coin coin{a, b, c, d};
    if (!is_unitary_coin(coin, kUnitarityTol)) {
        throw std::invalid_argument("Coin::from_entries: entries are not unitary");
    }
    return coin;
}

Coin coin_from_phase(double omega) {
    if (!std::isfinite(omega)) {
        throw std::invalid_argument("coin_from_phase: omega must be finite");
    }
    const cplx phase = std::polar(1.0, omega);
    return Coin{kInvSqrt2 * phase, cplx{kInvSqrt2, 0.0}, cplx{kInvSqrt2, 0.0},
                -kInvSqrt2 * std::conj(phase)};
}

std::pair<Mat2, Mat2> split_pq(const Coin& coin) {
    return {Mat2{coin.a, coin.b, 0.0, 0.0}, Mat2{0.0, 0.0, coin.c, coin.d}};
}

std::pair<Mat2, Mat2> split_rs(const Coin& coin) {
    return {Mat2{coin.c, coin.d, 0.0, 0.0}, Mat2{0.0, 0.0, coin.a, coin.b}};
}

}  // namespace qwre
