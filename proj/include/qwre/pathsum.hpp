#pragma once

#include <cstdint>
#include <vector>

#include "qwre/coin.hpp"
#include "qwre/environment.hpp"
#include "qwre/evolve.hpp"
#include "qwre/matrix2.hpp"

namespace qwre {

enum class Step : std::uint8_t { Left, Right };

/// A nearest-neighbor trajectory from the origin, stored as its move
/// sequence in time order.
struct PathWord {
    std::vector<Step> moves;

    /// Sites x_0 = 0, x_1, ..., x_n visited along the path.
    std::vector<int> sites() const;
};

/// Basis element of the orthonormal set {P_0, Q_0, R_0, S_0}.
enum class BasisLetter : std::uint8_t { P, Q, R, S };

/// scalar * basis-letter-at-origin, the fully reduced form of a path product.
struct ReducedWord {
    cplx scalar{};
    BasisLetter basis = BasisLetter::P;
};

/// Coefficients of Xi_n(l,m) in the {P_0, Q_0, R_0, S_0} basis.
struct PqrsCoefficients {
    cplx p{}, q{}, r{}, s{};

    /// Reconstruct the matrix p P_0 + q Q_0 + r R_0 + s S_0.
    Mat2 to_matrix(const Environment& env) const;
};

inline constexpr int kDefaultEnumerationCap = 16;

/// All C(l+m, l) words with l Left and m Right moves. l+m = 0 is an error
/// (Xi_0 is undefined; time 0 is handled by the state layer).
std::vector<PathWord> enumerate_paths(int l, int m);

/// Ordered product of P/Q factors along the path, origin factor rightmost;
/// the coin is taken at the site where each step starts.
Mat2 path_matrix(const PathWord& word, const Environment& env);

/// Reduce the same product to scalar * basis via the closed multiplication
/// table on {P,Q,R,S}; equals path_matrix to machine precision.
ReducedWord reduce_word(const PathWord& word, const Environment& env);

/// Sum reduce_word over all (l,m) paths, accumulated per basis letter.
/// Throws resource_limit_error when l+m exceeds the cap (2^n paths).
PqrsCoefficients xi_coefficients(int l, int m, const Environment& env,
                                 int cap = kDefaultEnumerationCap);

/// Brute-force position law at time n: mass(x) = ||Xi_n(l,m) qubit||^2.
Distribution oracle_distribution(const Environment& env, int n, const ChiralityVector& qubit,
                                 int cap = kDefaultEnumerationCap);

}  // namespace qwre
