#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace tnt {

using Count = std::uint64_t;

namespace detail {

inline constexpr int kBinomialRows = 65;

constexpr auto make_binomial_table()
{
    std::array<std::array<Count, kBinomialRows>, kBinomialRows> table{};
    for (int n = 0; n < kBinomialRows; ++n) {
        table[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            table[n][k] = table[n - 1][k - 1] + (k < n ? table[n - 1][k] : 0);
    }
    return table;
}

inline constexpr auto kBinomial = make_binomial_table();

} // namespace detail

/// C(n, k) for 0 <= n <= 64. Returns 0 when k < 0 or k > n.
constexpr Count binomial(int n, int k)
{
    if (n < 0 || n >= detail::kBinomialRows)
        throw std::out_of_range("binomial: n outside [0, 64]");
    if (k < 0 || k > n)
        return 0;
    return detail::kBinomial[n][k];
}

inline Count checked_add(Count x, Count y)
{
    Count out;
    if (__builtin_add_overflow(x, y, &out))
        throw std::overflow_error("copy count exceeds 64 bits");
    return out;
}

inline Count checked_mul(Count x, Count y)
{
    Count out;
    if (__builtin_mul_overflow(x, y, &out))
        throw std::overflow_error("copy count exceeds 64 bits");
    return out;
}

} // namespace tnt
