#pragma once

#include <cstdint>
#include <vector>

namespace qwre {

/// Last Pascal-triangle row whose entries all fit in 64 bits.
inline constexpr int kBinomialMaxRow = 66;

/// Exact binomial coefficient for 0 <= n <= kBinomialMaxRow; 0 out of range.
inline std::uint64_t binomial(int n, int k) {
    static const std::vector<std::vector<std::uint64_t>> table = [] {
        std::vector<std::vector<std::uint64_t>> t(kBinomialMaxRow + 1);
        for (int r = 0; r <= kBinomialMaxRow; ++r) {
            t[r].assign(static_cast<std::size_t>(r) + 1, 1);
            for (int j = 1; j < r; ++j) t[r][j] = t[r - 1][j - 1] + t[r - 1][j];
        }
        return t;
    }();
    if (n < 0 || k < 0 || k > n || n > kBinomialMaxRow) return 0;
    return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace qwre
