#pragma once

#include "qwre/matrix2.hpp"

namespace qwre {

/// A 2x2 unitary site coin [[a,b],[c,d]] acting on the chirality.
///
/// Unitarity pins down the entries up to phases:
///   |a|^2+|c|^2 = |b|^2+|d|^2 = 1,  a*conj(c) + b*conj(d) = 0,
///   c = -det * conj(b),  d = det * conj(a),  |det| = 1.
struct Coin {
    cplx a{}, b{}, c{}, d{};

    /// General unitary constructor; validates the relations above to 1e-12.
    /// Used for exercising the product-table algebra beyond the phase family.
    static Coin from_entries(cplx a, cplx b, cplx c, cplx d);

    Mat2 matrix() const { return {a, b, c, d}; }
    cplx det() const { return a * d - b * c; }
};

/// Site coin of the phase family: (1/sqrt2) [[e^{i omega}, 1], [1, -e^{-i omega}]].
/// omega = 0 gives the Hadamard gate.
Coin coin_from_phase(double omega);

/// True iff all Coin unitarity relations hold within tol.
bool is_unitary_coin(const Coin& coin, double tol = 1e-12);

/// Left-mover block P = [[a,b],[0,0]] and right-mover block Q = [[0,0],[c,d]];
/// P + Q is the coin matrix.
std::pair<Mat2, Mat2> split_pq(const Coin& coin);

/// Companion blocks R = [[c,d],[0,0]] and S = [[0,0],[a,b]] closing the
/// product algebra on {P,Q,R,S}.
std::pair<Mat2, Mat2> split_rs(const Coin& coin);

}  // namespace qwre
