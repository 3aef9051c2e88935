/**
 * @file stirling.hpp
 * @brief Memoized Stirling and r-Stirling triangles and the Stirling transform.
 *
 * Index conventions
 * -----------------
 * Triangle stores the classical arrays: at(n, k) = [n k] (first kind,
 * permutations of n elements with k cycles) or {n k} (second kind, set
 * partitions into k blocks).
 *
 * RTriangle stores the r-Stirling arrays *doubly shifted*, so that
 *
 *     at(n, k) = [n+r  k+r]_r   or   {n+r  k+r}_r,
 *
 * the count of permutations / partitions of n+r elements into k+r cycles /
 * blocks with the r smallest elements in distinct cycles / blocks. With this
 * convention every identity written as a sum over [k+r j+r]_r reads at(k, j)
 * directly. at(0, k) = delta(k, 0); r = 0 is the plain triangle and r = 1 is
 * the plain triangle shifted by one in both indices.
 *
 * Rows are produced by Broder's recurrences
 *
 *     [n k]_r-shifted = (n + r - 1) * at(n-1, k) + at(n-1, k-1)
 *     {n k}_r-shifted = (k + r)     * at(n-1, k) + at(n-1, k-1)
 *
 * and grown on demand. A row is published only after it is complete, and
 * readers take a shared lock, so concurrent callers always see whole rows.
 */
#pragma once

#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <vector>

#include "memo.hpp"
#include "poly.hpp"
#include "rat.hpp"

namespace daehee {

enum class StirlingKind { first, second };

class RTriangle {
public:
    RTriangle(StirlingKind kind, int r) : kind_(kind), r_(r) {
        if (r < 0) throw domain_error("r-Stirling triangle with negative r");
    }

    [[nodiscard]] StirlingKind kind() const { return kind_; }
    [[nodiscard]] int r() const { return r_; }

    /// Shifted entry; 0 outside 0 <= k <= n.
    [[nodiscard]] BigInt at(int n, int k) const {
        if (n < 0 || k < 0 || k > n) return 0;
        ensure_rows(n);
        std::shared_lock lock(mu_);
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    [[nodiscard]] std::vector<BigInt> row(int n) const {
        if (n < 0) throw domain_error("negative triangle row");
        ensure_rows(n);
        std::shared_lock lock(mu_);
        return rows_[static_cast<std::size_t>(n)];
    }

private:
    void ensure_rows(int n) const {
        {
            std::shared_lock lock(mu_);
            if (static_cast<int>(rows_.size()) > n) return;
        }
        std::unique_lock lock(mu_);
        if (rows_.empty()) rows_.push_back({BigInt(1)});
        while (static_cast<int>(rows_.size()) <= n) {
            const auto m = static_cast<long>(rows_.size());
            const auto& prev = rows_.back();
            std::vector<BigInt> next(static_cast<std::size_t>(m) + 1);
            for (long k = 0; k <= m; ++k) {
                BigInt stay = (k < m) ? prev[static_cast<std::size_t>(k)] : BigInt(0);
                const long mult = (kind_ == StirlingKind::first) ? (m + r_ - 1) : (k + r_);
                BigInt v = stay * mult;
                if (k > 0) v += prev[static_cast<std::size_t>(k - 1)];
                next[static_cast<std::size_t>(k)] = std::move(v);
            }
            rows_.push_back(std::move(next));
        }
    }

    StirlingKind kind_;
    int r_;
    mutable std::shared_mutex mu_;
    mutable std::deque<std::vector<BigInt>> rows_;
};

/// The classical triangles are the r = 0 case.
class Triangle : public RTriangle {
public:
    explicit Triangle(StirlingKind kind) : RTriangle(kind, 0) {}
};

namespace detail {

inline const RTriangle& rtable(StirlingKind kind, int r) {
    static std::mutex mu;
    static std::map<std::pair<StirlingKind, int>, std::unique_ptr<RTriangle>> tables;
    std::lock_guard lock(mu);
    auto& slot = tables[{kind, r}];
    if (!slot) slot = std::make_unique<RTriangle>(kind, r);
    return *slot;
}

inline BigInt with_fault(BigInt v, FaultTable table, int n, int k, int r = 0) {
    if (auto d = fault::delta(table, n, k, r)) v += d->num();
    return v;
}

}  // namespace detail

/// Unsigned first kind [n k]; 0 for k > n or negative indices.
inline BigInt stirling1_unsigned(int n, int k) {
    return detail::with_fault(detail::rtable(StirlingKind::first, 0).at(n, k), FaultTable::stirling1, n, k);
}

/// Unsigned second kind {n k}.
inline BigInt stirling2(int n, int k) {
    return detail::with_fault(detail::rtable(StirlingKind::second, 0).at(n, k), FaultTable::stirling2, n, k);
}

inline BigInt stirling1_signed(int n, int k) { return neg_one_pow(n - k) * stirling1_unsigned(n, k); }
inline BigInt stirling2_signed(int n, int k) { return neg_one_pow(n - k) * stirling2(n, k); }

/// Shifted r-Stirling numbers: rstirling1(n, k, r) = [n+r k+r]_r.
inline BigInt rstirling1(int n, int k, int r) {
    return detail::with_fault(detail::rtable(StirlingKind::first, r).at(n, k), FaultTable::rstirling1, n, k, r);
}

/// rstirling2(n, k, r) = {n+r k+r}_r.
inline BigInt rstirling2(int n, int k, int r) {
    return detail::with_fault(detail::rtable(StirlingKind::second, r).at(n, k), FaultTable::rstirling2, n, k, r);
}

inline BigInt rstirling1_signed(int n, int k, int r) { return neg_one_pow(n - k) * rstirling1(n, k, r); }
inline BigInt rstirling2_signed(int n, int k, int r) { return neg_one_pow(n - k) * rstirling2(n, k, r); }

/// Weight kernel of a Stirling transform Q_k = sum_j w(k, j) P_j.
struct StirlingWeight {
    StirlingKind kind = StirlingKind::second;
    bool is_signed = false;
    int r = -1;  ///< -1 selects the classical numbers; r >= 0 the shifted r-Stirling numbers

    static constexpr StirlingWeight s1() { return {StirlingKind::first, false, -1}; }
    static constexpr StirlingWeight s1_signed() { return {StirlingKind::first, true, -1}; }
    static constexpr StirlingWeight s2() { return {StirlingKind::second, false, -1}; }
    static constexpr StirlingWeight s2_signed() { return {StirlingKind::second, true, -1}; }
    static constexpr StirlingWeight rs1(int r, bool sgn = false) { return {StirlingKind::first, sgn, r}; }
    static constexpr StirlingWeight rs2(int r, bool sgn = false) { return {StirlingKind::second, sgn, r}; }

    /// The orthogonal partner: swaps the kind and the sign convention.
    [[nodiscard]] constexpr StirlingWeight inverse() const {
        return {kind == StirlingKind::first ? StirlingKind::second : StirlingKind::first, !is_signed, r};
    }

    [[nodiscard]] BigInt operator()(int n, int k) const {
        BigInt v;
        if (r < 0) {
            v = (kind == StirlingKind::first) ? stirling1_unsigned(n, k) : stirling2(n, k);
        } else {
            v = (kind == StirlingKind::first) ? rstirling1(n, k, r) : rstirling2(n, k, r);
        }
        if (is_signed && (n - k) % 2 != 0) v = -v;
        return v;
    }

    friend constexpr bool operator==(const StirlingWeight&, const StirlingWeight&) = default;
};

/// Q_k = sum_{j<=k} w(k, j) P_j for k = 0..seq.size()-1.
inline std::vector<Poly> stirling_transform(std::span<const Poly> seq, StirlingWeight w) {
    std::vector<Poly> out;
    out.reserve(seq.size());
    for (int k = 0; k < static_cast<int>(seq.size()); ++k) {
        Poly acc;
        for (int j = 0; j <= k; ++j) {
            const BigInt c = w(k, j);
            if (c != 0) acc += seq[static_cast<std::size_t>(j)] * Rat(c);
        }
        out.push_back(std::move(acc));
    }
    return out;
}

/// Undoes stirling_transform(seq, forward) using the orthogonal kernel.
inline std::vector<Poly> inverse_stirling_transform(std::span<const Poly> seq, StirlingWeight forward) {
    return stirling_transform(seq, forward.inverse());
}

}  // namespace daehee
