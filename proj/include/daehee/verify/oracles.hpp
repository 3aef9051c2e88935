/**
 * @file oracles.hpp
 * @brief Exhaustive-enumeration oracles for Stirling numbers and power sums.
 *
 * These deliberately share no code with the recurrence tables: they count
 * permutations by cycles and set partitions by blocks directly.
 */
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "../errors.hpp"
#include "../rat.hpp"
#include "../stirling.hpp"

namespace daehee::verify {

inline constexpr int kOracleMaxN = 8;

namespace detail {

/// Cycle id of every element of a permutation.
inline std::vector<int> cycle_ids(const std::vector<int>& perm, int& cycles) {
    std::vector<int> id(perm.size(), -1);
    cycles = 0;
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (id[s] != -1) continue;
        for (auto e = s; id[e] == -1; e = static_cast<std::size_t>(perm[e])) id[e] = cycles;
        ++cycles;
    }
    return id;
}

inline bool first_r_distinct(const std::vector<int>& label, int r) {
    for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
            if (label[static_cast<std::size_t>(a)] == label[static_cast<std::size_t>(b)]) return false;
    return true;
}

/// Visits every set partition of {0..n-1} as a restricted growth string.
template <class Visit>
void for_each_partition(int n, Visit&& visit) {
    if (n == 0) {
        visit(std::vector<int>{}, 0);
        return;
    }
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    std::vector<int> maxima(static_cast<std::size_t>(n), 0);
    while (true) {
        visit(rgs, maxima.back() + 1);
        int i = n - 1;
        while (i > 0 && rgs[static_cast<std::size_t>(i)] > maxima[static_cast<std::size_t>(i - 1)]) --i;
        if (i == 0) return;
        ++rgs[static_cast<std::size_t>(i)];
        maxima[static_cast<std::size_t>(i)] =
            std::max(maxima[static_cast<std::size_t>(i - 1)], rgs[static_cast<std::size_t>(i)]);
        for (int j = i + 1; j < n; ++j) {
            rgs[static_cast<std::size_t>(j)] = 0;
            maxima[static_cast<std::size_t>(j)] = maxima[static_cast<std::size_t>(i)];
        }
    }
}

}  // namespace detail

/// Row of exhaustive counts: entry k is the number of permutations of
/// {1..n} with k cycles (first kind) or set partitions into k blocks (second
/// kind) in which the r smallest elements lie in distinct cycles/blocks.
/// Indices are unshifted, so entry k equals [n k]_r or {n k}_r.
inline std::vector<BigInt> oracle_stirling_row(int n, StirlingKind kind, int r = 0) {
    if (n < 0 || n > kOracleMaxN) throw domain_error("oracle_stirling_bruteforce: n must be in 0..8");
    if (r < 0) throw domain_error("oracle_stirling_bruteforce: negative r");
    std::vector<long> count(static_cast<std::size_t>(n) + 1, 0);
    if (r > n) return {count.begin(), count.end()};
    if (kind == StirlingKind::first) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int cycles = 0;
            const auto ids = detail::cycle_ids(perm, cycles);
            if (detail::first_r_distinct(ids, r)) ++count[static_cast<std::size_t>(cycles)];
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        detail::for_each_partition(n, [&](const std::vector<int>& rgs, int blocks) {
            if (detail::first_r_distinct(rgs, r)) ++count[static_cast<std::size_t>(blocks)];
        });
    }
    return {count.begin(), count.end()};
}

/// Single entry of oracle_stirling_row; zero for k > n.
inline BigInt oracle_stirling_bruteforce(int n, int k, StirlingKind kind, int r = 0) {
    if (k < 0) throw domain_error("oracle_stirling_bruteforce: negative k");
    const auto row = oracle_stirling_row(n, kind, r);
    return k <= n ? row[static_cast<std::size_t>(k)] : BigInt(0);
}

/// 1^k + 2^k + ... + n^k by direct summation.
inline Rat oracle_powersum_bruteforce(int k, int n) {
    if (k < 0 || k > 8) throw domain_error("oracle_powersum_bruteforce: k must be in 0..8");
    if (n < 0 || n > 12) throw domain_error("oracle_powersum_bruteforce: n must be in 0..12");
    BigInt acc;
    for (int i = 1; i <= n; ++i) acc += ipow(BigInt(i), static_cast<unsigned long>(k));
    return Rat(acc);
}

}  // namespace daehee::verify
