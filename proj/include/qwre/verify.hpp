#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qwre::verify {

struct SuiteResult {
    std::string name;
    bool pass = false;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

/// reduce_word against the direct matrix product, every word up to the given
/// length, over seeded random environments.
SuiteResult run_product_table(int max_len = 10, int env_count = 50, double tol = 1e-13,
                              std::uint64_t seed = 2024);

/// Three-way quenched distributions (state vector / path sum / reduced
/// formula) plus pathsum-vs-closed-form coefficient agreement, n <= cap.
SuiteResult run_oracle_equivalence(int cap = 12, int env_count = 100, double tol = 1e-10,
                                   std::uint64_t seed = 7);

/// |W_2| over all l-vs-m branch cases and both boundary rows.
SuiteResult run_w2(int env_count = 50, double tol = 1e-12, std::uint64_t seed = 11);

/// Combinatorial sums against Jacobi forms for all n <= max_n, 1 <= l <= n/2.
SuiteResult run_jacobi(int max_n = 60, double rel_tol = 1e-9);

/// Limit-density normalization, f_K(0), and closed-form-vs-quadrature moments.
SuiteResult run_limits(double moment_tol = 1e-8, double norm_tol = 1e-10);

std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, int cap);

}  // namespace qwre::verify
