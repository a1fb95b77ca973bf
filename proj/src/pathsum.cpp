#include "qwre/pathsum.hpp"

#include <algorithm>
#include <stdexcept>

#include "qwre/errors.hpp"

namespace qwre {

std::vector<int> PathWord::sites() const {
    std::vector<int> xs(moves.size() + 1, 0);
    for (std::size_t j = 0; j < moves.size(); ++j) {
        xs[j + 1] = xs[j] + (moves[j] == Step::Left ? -1 : +1);
    }
    return xs;
}

namespace {

// A_x B_y = coeff(A at x) * result_y. Coefficient selects an entry of the
// left factor's coin; the basis letter and site carry over from the right.
struct TableEntry {
    char coeff;
    BasisLetter result;
};

constexpr TableEntry kProductTable[4][4] = {
    /* P  */ {{'a', BasisLetter::P}, {'b', BasisLetter::R}, {'a', BasisLetter::R}, {'b', BasisLetter::P}},
    /* Q  */ {{'c', BasisLetter::S}, {'d', BasisLetter::Q}, {'c', BasisLetter::Q}, {'d', BasisLetter::S}},
    /* R  */ {{'c', BasisLetter::P}, {'d', BasisLetter::R}, {'c', BasisLetter::R}, {'d', BasisLetter::P}},
    /* S  */ {{'a', BasisLetter::S}, {'b', BasisLetter::Q}, {'a', BasisLetter::Q}, {'b', BasisLetter::S}},
};

cplx coin_entry(const Coin& coin, char which) {
    switch (which) {
        case 'a': return coin.a;
        case 'b': return coin.b;
        case 'c': return coin.c;
        default: return coin.d;
    }
}

}  // namespace

std::vector<PathWord> enumerate_paths(int l, int m) {
    if (l < 0 || m < 0) throw std::invalid_argument("enumerate_paths: negative step count");
    if (l + m == 0) throw std::invalid_argument("enumerate_paths: empty walk (l+m must be >= 1)");
    std::vector<Step> moves(static_cast<std::size_t>(l), Step::Left);
    moves.insert(moves.end(), static_cast<std::size_t>(m), Step::Right);
    std::vector<PathWord> words;
    do {
        words.push_back(PathWord{moves});
    } while (std::next_permutation(moves.begin(), moves.end()));
    return words;
}

Mat2 path_matrix(const PathWord& word, const Environment& env) {
    Mat2 product = Mat2::identity();
    int x = 0;
    for (const Step move : word.moves) {
        const Coin coin = coin_from_phase(env.phase(x));
        const auto [p, q] = split_pq(coin);
        product = (move == Step::Left ? p : q) * product;
        x += (move == Step::Left ? -1 : +1);
    }
    return product;
}

ReducedWord reduce_word(const PathWord& word, const Environment& env) {
    const std::size_t n = word.moves.size();
    if (n == 0) throw std::invalid_argument("reduce_word: empty word");
    const std::vector<int> xs = word.sites();
    // The written word is F_n ... F_1 (origin factor rightmost); fold the
    // leftmost pair repeatedly, i.e. walk the steps in reverse time order.
    BasisLetter letter = word.moves[n - 1] == Step::Left ? BasisLetter::P : BasisLetter::Q;
    int site = xs[n - 1];
    cplx scalar{1.0, 0.0};
    for (std::size_t j = n - 1; j-- > 0;) {
        const BasisLetter right = word.moves[j] == Step::Left ? BasisLetter::P : BasisLetter::Q;
        const TableEntry entry = kProductTable[static_cast<int>(letter)][static_cast<int>(right)];
        scalar *= coin_entry(coin_from_phase(env.phase(site)), entry.coeff);
        letter = entry.result;
        site = xs[j];
    }
    return ReducedWord{scalar, letter};
}

Mat2 PqrsCoefficients::to_matrix(const Environment& env) const {
    const Coin origin = coin_from_phase(env.phase(0));
    const auto [p0, q0] = split_pq(origin);
    const auto [r0, s0] = split_rs(origin);
    return p * p0 + q * q0 + r * r0 + s * s0;
}

PqrsCoefficients xi_coefficients(int l, int m, const Environment& env, int cap) {
    if (l < 0 || m < 0) throw std::invalid_argument("xi_coefficients: negative step count");
    if (l + m == 0) throw std::invalid_argument("xi_coefficients: empty walk (l+m must be >= 1)");
    if (l + m > cap) {
        throw resource_limit_error("xi_coefficients: l+m exceeds the enumeration cap");
    }
    std::vector<Step> moves(static_cast<std::size_t>(l), Step::Left);
    moves.insert(moves.end(), static_cast<std::size_t>(m), Step::Right);
    PqrsCoefficients coeffs;
    do {
        const ReducedWord reduced = reduce_word(PathWord{moves}, env);
        switch (reduced.basis) {
            case BasisLetter::P: coeffs.p += reduced.scalar; break;
            case BasisLetter::Q: coeffs.q += reduced.scalar; break;
            case BasisLetter::R: coeffs.r += reduced.scalar; break;
            case BasisLetter::S: coeffs.s += reduced.scalar; break;
        }
    } while (std::next_permutation(moves.begin(), moves.end()));
    return coeffs;
}

Distribution oracle_distribution(const Environment& env, int n, const ChiralityVector& qubit,
                                 int cap) {
    if (n <= 0) throw std::invalid_argument("oracle_distribution: n must be positive");
    if (n > cap) {
        throw resource_limit_error("oracle_distribution: n exceeds the enumeration cap");
    }
    Distribution dist;
    dist.time = n;
    for (int l = 0; l <= n; ++l) {
        const int m = n - l;
        const Mat2 xi = xi_coefficients(l, m, env, cap).to_matrix(env);
        dist.mass[m - l] = (xi * qubit).norm_sq();
    }
    return dist;
}

}  // namespace qwre
