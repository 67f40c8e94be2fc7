#pragma once

#include <bit>
#include <stdexcept>
#include <vector>

namespace umbral {

// Determinant over any commutative ring type with +, -, *.
// Subset dynamic programming over column masks: dp[mask] is the minor of
// the first popcount(mask) rows against the columns in mask, so partial
// products are shared across permutations.
template <class T>
T determinant(const std::vector<std::vector<T>>& m, const T& zero, const T& one) {
    const size_t n = m.size();
    if (n == 0) return one;
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
    std::vector<T> dp(static_cast<size_t>(1) << n, zero);
    dp[0] = one;
    for (size_t mask = 1; mask < dp.size(); ++mask) {
        const int r = std::popcount(mask) - 1;
        T acc = zero;
        int pos = 0;
        for (size_t j = 0; j < n; ++j) {
            if (!(mask >> j & 1)) continue;
            T contrib = m[static_cast<size_t>(r)][j] * dp[mask ^ (static_cast<size_t>(1) << j)];
            if ((r + pos) % 2 == 0)
                acc = acc + contrib;
            else
                acc = acc - contrib;
            ++pos;
        }
        dp[mask] = acc;
    }
    return dp.back();
}

}  // namespace umbral
