#include "qwre/verify.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qwre/binomial.hpp"
#include "qwre/closedform.hpp"
#include "qwre/environment.hpp"
#include "qwre/evolve.hpp"
#include "qwre/limit.hpp"
#include "qwre/pathsum.hpp"
#include "qwre/quadrature.hpp"

namespace qwre::verify {

namespace {

EnvironmentSpec uniform_spec() {
    EnvironmentSpec spec;
    spec.default_measure = PhaseMeasure::uniform(-M_PI, M_PI);
    return spec;
}

Mat2 basis_matrix(BasisLetter letter, const Coin& origin) {
    const auto [p0, q0] = split_pq(origin);
    const auto [r0, s0] = split_rs(origin);
    switch (letter) {
        case BasisLetter::P: return p0;
        case BasisLetter::Q: return q0;
        case BasisLetter::R: return r0;
        default: return s0;
    }
}

double pairwise_max_diff(const Distribution& a, const Distribution& b) {
    double max_diff = 0.0;
    for (const auto& [x, p] : a.mass) max_diff = std::max(max_diff, std::abs(p - b.at(x)));
    for (const auto& [x, p] : b.mass) max_diff = std::max(max_diff, std::abs(p - a.at(x)));
    return max_diff;
}

double coeff_max_diff(const PqrsCoefficients& a, const PqrsCoefficients& b) {
    return std::max(std::max(std::abs(a.p - b.p), std::abs(a.q - b.q)),
                    std::max(std::abs(a.r - b.r), std::abs(a.s - b.s)));
}

// Relative where the pair has magnitude, absolute on (near-)zero targets.
double mixed_error(double a, double b) {
    const double denom = std::max(std::abs(a), std::abs(b));
    return denom < 1e-12 ? std::abs(a - b) : std::abs(a - b) / denom;
}

SuiteResult make_result(const std::string& name, double max_error, double tol,
                        const std::string& detail = {}) {
    return SuiteResult{name, max_error < tol, max_error, tol, detail};
}

}  // namespace

SuiteResult run_product_table(int max_len, int env_count, double tol, std::uint64_t seed) {
    double max_error = 0.0;
    for (int e = 0; e < env_count; ++e) {
        const Environment env = sample_environment(uniform_spec(), max_len + 1, seed + e);
        const Coin origin = coin_from_phase(env.phase(0));
        for (int n = 1; n <= max_len; ++n) {
            for (int l = 0; l <= n; ++l) {
                for (const PathWord& word : enumerate_paths(l, n - l)) {
                    const ReducedWord reduced = reduce_word(word, env);
                    const Mat2 direct = path_matrix(word, env);
                    const Mat2 via_table = reduced.scalar * basis_matrix(reduced.basis, origin);
                    max_error = std::max(max_error, max_abs_diff(direct, via_table));
                }
            }
        }
    }
    return make_result("product-table", max_error, tol);
}

SuiteResult run_oracle_equivalence(int cap, int env_count, double tol, std::uint64_t seed) {
    const ChiralityVector qubit = symmetric_initial_qubit();
    const Environment zero_env(0.0);
    std::vector<Distribution> hadamard(static_cast<std::size_t>(cap) + 1);
    for (int n = 1; n <= cap; ++n) hadamard[n] = evolve_to(qubit, zero_env, n);

    double max_dist_error = 0.0;
    double max_coeff_error = 0.0;
    for (int e = 0; e < env_count; ++e) {
        const Environment env = sample_environment(uniform_spec(), cap, seed + e);
        for (int n = 1; n <= cap; ++n) {
            Distribution oracle;
            oracle.time = n;
            for (int l = 0; l <= n; ++l) {
                const PqrsCoefficients enumerated = xi_coefficients(l, n - l, env, cap);
                const PqrsCoefficients closed = xi_coefficients_closed(l, n - l, env);
                max_coeff_error = std::max(max_coeff_error, coeff_max_diff(enumerated, closed));
                oracle.mass[n - 2 * l] = (enumerated.to_matrix(env) * qubit).norm_sq();
            }
            const Distribution evolved = evolve_to(qubit, env, n);
            const Distribution reduced =
                quenched_distribution_reduced(n, env.phase(0), hadamard[n]);
            max_dist_error = std::max(max_dist_error, pairwise_max_diff(evolved, oracle));
            max_dist_error = std::max(max_dist_error, pairwise_max_diff(evolved, reduced));
            max_dist_error = std::max(max_dist_error, pairwise_max_diff(oracle, reduced));
        }
    }
    std::ostringstream detail;
    detail << "distribution " << max_dist_error << ", coefficients " << max_coeff_error;
    return make_result("oracle-equivalence", std::max(max_dist_error, max_coeff_error), tol,
                       detail.str());
}

SuiteResult run_w2(int env_count, double tol, std::uint64_t seed) {
    // One (l,m) set per joint branch of the four phase-factor case splits,
    // plus both boundary rows.
    static const std::pair<int, int> cases[] = {
        {5, 2}, {9, 3}, {4, 1},          // l > m+1
        {3, 2}, {6, 5}, {2, 1},          // l = m+1
        {2, 2}, {5, 5}, {1, 1},          // l = m
        {2, 3}, {5, 6}, {1, 2},          // m = l+1
        {2, 5}, {3, 9}, {1, 4},          // m > l+1
        {6, 0}, {1, 0}, {0, 6}, {0, 1},  // boundaries
    };
    double max_error = 0.0;
    for (int e = 0; e < env_count; ++e) {
        const Environment env = sample_environment(uniform_spec(), 12, seed + e);
        for (const auto& [l, m] : cases) {
            max_error = std::max(max_error, w2_vanishes_check(l, m, env));
        }
    }
    return make_result("w2", max_error, tol);
}

SuiteResult run_jacobi(int max_n, double rel_tol) {
    using int128 = __int128;
    double max_error = 0.0;
    for (int n = 2; n <= max_n; ++n) {
        for (int k = 1; k <= n / 2; ++k) {
            // Jacobi forms against the direct amplitude sums.
            const HadamardAmplitudes direct = hadamard_amplitudes(k, n - k);
            const auto [p_j, q_j] = amplitudes_via_jacobi(k, n);
            max_error = std::max(max_error, mixed_error(direct.p_h, p_j));
            max_error = std::max(max_error, mixed_error(direct.q_h, q_j));

            // First identity, cleared of the 1/gamma denominators by k:
            // sum (-1)^{g-1} C(k,g) C(n-k-1,g-1) = 2^{k-1} P^{1,n-2k}_{k-1}(0).
            int128 lhs1 = 0;
            for (int g = 1; g <= k; ++g) {
                const int128 term = static_cast<int128>(binomial(k, g)) * binomial(n - k - 1, g - 1);
                lhs1 += (g % 2 == 1) ? term : -term;
            }
            const double rhs1 = std::ldexp(jacobi_p(k - 1, 1.0, n - 2 * k, 0.0), k - 1);
            max_error = std::max(max_error, mixed_error(static_cast<double>(lhs1), rhs1));

            // Second identity:
            // sum (-1)^{g-1} C(k-1,g-1) C(n-k-1,g-1) = 2^{k-1} P^{0,n-2k}_{k-1}(0).
            int128 lhs2 = 0;
            for (int g = 1; g <= k; ++g) {
                const int128 term =
                    static_cast<int128>(binomial(k - 1, g - 1)) * binomial(n - k - 1, g - 1);
                lhs2 += (g % 2 == 1) ? term : -term;
            }
            const double rhs2 = std::ldexp(jacobi_p(k - 1, 0.0, n - 2 * k, 0.0), k - 1);
            max_error = std::max(max_error, mixed_error(static_cast<double>(lhs2), rhs2));
        }
    }
    return make_result("jacobi", max_error, rel_tol);
}

SuiteResult run_limits(double moment_tol, double norm_tol) {
    double max_norm_error = 0.0;
    double max_moment_error = 0.0;
    for (const double omega0 : {0.0, M_PI / 6.0, M_PI / 3.0, M_PI / 2.0}) {
        const LimitDensity density = quenched_limit_density(omega0);
        max_norm_error =
            std::max(max_norm_error, std::abs(limit_probability(density, -1.0, 1.0) - 1.0));
        const Moments closed = limit_moments(density);  // cross-asserts quadrature internally
        const double c = 0.5 * (2.0 - M_SQRT2);
        const double s = std::sin(omega0);
        max_moment_error = std::max(max_moment_error, std::abs(closed.mean + s * c));
        max_moment_error =
            std::max(max_moment_error, std::abs(closed.variance - c * (1.0 - c * s * s)));
    }
    const double fk_error = std::abs(f_k(0.0) - 1.0 / M_PI);
    std::ostringstream detail;
    detail << "normalization " << max_norm_error << ", moments " << max_moment_error << ", f_K(0) "
           << fk_error;
    const bool pass = max_norm_error < norm_tol && max_moment_error < moment_tol &&
                      fk_error < 1e-12;
    SuiteResult result{"limits", pass, std::max(max_norm_error, max_moment_error), norm_tol,
                       detail.str()};
    return result;
}

std::vector<std::string> suite_names() {
    return {"product-table", "oracle", "w2", "jacobi", "limits"};
}

SuiteResult run_suite(const std::string& name, int cap) {
    if (name == "product-table") return run_product_table();
    if (name == "oracle") return run_oracle_equivalence(cap);
    if (name == "w2") return run_w2();
    if (name == "jacobi") return run_jacobi();
    if (name == "limits") return run_limits();
    throw std::invalid_argument("unknown verification suite '" + name + "'");
}

}  // namespace qwre::verify
