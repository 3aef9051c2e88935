/**
 * @file sequences.hpp
 * @brief Bernoulli, Daehee, power-sum, harmonic and hyperharmonic families.
 *
 * Each family has exactly one canonical construction here. Alternative
 * formulas live in the identity catalog (verify/) as cross-checks.
 *
 * Hyperharmonic indexing: the classical symbol H_r^(n) has the position r as
 * a subscript and the order n as a superscript. Functions below take
 * (index, order) explicitly: hyperharmonic_number(index, order).
 */
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "memo.hpp"
#include "poly.hpp"
#include "rat.hpp"
#include "series.hpp"
#include "stirling.hpp"

namespace daehee {

enum class FamilyId {
    BERNOULLI_NUM,
    BERNOULLI_POLY,
    POWER_SUM,
    DAEHEE1,
    DAEHEE2,
    DAEHEE_ORDER_R,
    DAEHEE1_NUM,
    DAEHEE2_NUM,
    NORLUND_NEG,
    HARMONIC_NUM,
    HYPERHARMONIC_NUM,
    HYPERHARMONIC_POLY,
    HYPERHARMONIC_NEG,
    HARMONIC_POLY,
    GEN_HYPERHARMONIC,
    POLYBERNOULLI_NEG,
};

struct FamilyInfo {
    FamilyId id;
    std::string_view name;
    bool is_poly;
    int arity;  ///< integer arguments (for polynomial families: k, plus r when needed)
};

inline constexpr FamilyInfo kFamilies[] = {
    {FamilyId::BERNOULLI_NUM, "bernoulli", false, 1},
    {FamilyId::BERNOULLI_POLY, "bernoulli_poly", true, 1},
    {FamilyId::POWER_SUM, "power_sum", true, 1},
    {FamilyId::DAEHEE1, "daehee1", true, 1},
    {FamilyId::DAEHEE2, "daehee2", true, 1},
    {FamilyId::DAEHEE_ORDER_R, "daehee_order_r", true, 2},
    {FamilyId::DAEHEE1_NUM, "daehee1_number", false, 1},
    {FamilyId::DAEHEE2_NUM, "daehee2_number", false, 1},
    {FamilyId::NORLUND_NEG, "norlund_neg", false, 2},
    {FamilyId::HARMONIC_NUM, "harmonic", false, 1},
    {FamilyId::HYPERHARMONIC_NUM, "hyperharmonic", false, 2},
    {FamilyId::HYPERHARMONIC_POLY, "hyperharmonic_poly", true, 1},
    {FamilyId::HYPERHARMONIC_NEG, "hyperharmonic_neg", false, 2},
    {FamilyId::HARMONIC_POLY, "harmonic_poly", true, 1},
    {FamilyId::GEN_HYPERHARMONIC, "gen_hyperharmonic", false, 3},
    {FamilyId::POLYBERNOULLI_NEG, "polybernoulli_neg", false, 2},
};

inline const FamilyInfo& family_info(FamilyId id) {
    for (const auto& f : kFamilies)
        if (f.id == id) return f;
    throw lookup_error("unknown family id");
}

inline std::string_view to_string(FamilyId id) { return family_info(id).name; }

inline FamilyId family_from_string(std::string_view name) {
    for (const auto& f : kFamilies)
        if (f.name == name) return f.id;
    throw lookup_error("unknown family: " + std::string(name));
}

// ---------------------------------------------------------------------------
// Bernoulli

/// B_k = sum_j (-1)^j j!/(j+1) {k j}, with B_1 = -1/2.
inline Rat bernoulli_number(int k) {
    if (k < 0) throw domain_error("bernoulli_number of negative index");
    static Memo<int, Rat> memo;
    Rat value = memo.get(k, [k] {
        Rat acc;
        for (int j = 0; j <= k; ++j)
            acc += Rat(neg_one_pow(j) * factorial(j) * stirling2(k, j), BigInt(j + 1));
        return acc;
    });
    if (auto d = fault::delta(FaultTable::bernoulli, k)) value += *d;
    return value;
}

/// B_k(x) = sum_j C(k, j) B_j x^(k-j).
inline Poly bernoulli_poly(int k) {
    if (k < 0) throw domain_error("bernoulli_poly of negative degree");
    static Memo<int, Poly> memo;
    return memo.get(k, [k] {
        std::vector<Rat> c(static_cast<std::size_t>(k) + 1);
        for (int j = 0; j <= k; ++j) c[static_cast<std::size_t>(k - j)] = Rat(binomial(k, j)) * bernoulli_number(j);
        return Poly(std::move(c));
    });
}

/// S_k(x) = (B_{k+1}(x+1) - B_{k+1}(1)) / (k+1).
inline Poly power_sum_poly(int k) {
    if (k < 0) throw domain_error("power_sum_poly of negative index");
    const Poly b = bernoulli_poly(k + 1);
    return (shift(b, 1) - Poly::constant(eval(b, 1))) / Rat(k + 1);
}

// ---------------------------------------------------------------------------
// Daehee

/// D_k(x) = sum_j s(k, j) B_j(x) with signed first-kind weights.
inline Poly daehee_poly(int k) {
    if (k < 0) throw domain_error("daehee_poly of negative degree");
    static Memo<int, Poly> memo;
    Poly value = memo.get(k, [k] {
        Poly acc;
        for (int j = 0; j <= k; ++j) acc += bernoulli_poly(j) * Rat(stirling1_signed(k, j));
        return acc;
    });
    if (auto d = fault::delta(FaultTable::daehee1, k)) value += Poly::constant(*d);
    return value;
}

/// Second kind: sum_j [k j] B_j(x) with unsigned weights.
inline Poly daehee2_poly(int k) {
    if (k < 0) throw domain_error("daehee2_poly of negative degree");
    static Memo<int, Poly> memo;
    Poly value = memo.get(k, [k] {
        Poly acc;
        for (int j = 0; j <= k; ++j) acc += bernoulli_poly(j) * Rat(stirling1_unsigned(k, j));
        return acc;
    });
    if (auto d = fault::delta(FaultTable::daehee2, k)) value += Poly::constant(*d);
    return value;
}

/// D_k = (-1)^k k!/(k+1).
inline Rat daehee_number(int k) {
    if (k < 0) throw domain_error("daehee_number of negative index");
    return Rat(neg_one_pow(k) * factorial(k), BigInt(k + 1));
}

/// Second-kind number: 1 for k = 0, -(k-1)!/(k+1) otherwise.
inline Rat daehee2_number(int k) {
    if (k < 0) throw domain_error("daehee2_number of negative index");
    if (k == 0) return 1;
    return Rat(-factorial(k - 1), BigInt(k + 1));
}

/// Coefficients b_j^(-r) of (ln(1+t)/t)^r for j = 0..maxj.
inline std::vector<Rat> norlund_neg(int r, int maxj) {
    if (r < 1) throw domain_error("norlund_neg requires r >= 1");
    if (maxj < 0) throw domain_error("norlund_neg requires maxj >= 0");
    static Memo<std::pair<int, int>, std::vector<Rat>> memo;
    return memo.get({r, maxj}, [&] { return gf_build(gf::NorlundNeg{r}, maxj).coeffs(); });
}

/// D_k^(r)(x) = k! sum_j binom(x, k-j) b_j^(-r).
inline Poly daehee_order_r_poly(int k, int r) {
    if (k < 0) throw domain_error("daehee_order_r_poly of negative degree");
    if (r < 1) throw domain_error("daehee_order_r_poly requires r >= 1");
    const auto b = norlund_neg(r, k);
    Poly acc;
    for (int j = 0; j <= k; ++j) acc += binom_poly(0, k - j) * b[static_cast<std::size_t>(j)];
    return acc * Rat(factorial(k));
}

// ---------------------------------------------------------------------------
// Harmonic and hyperharmonic

/// H_n = 1 + 1/2 + ... + 1/n, H_0 = 0.
inline Rat harmonic_number(int n) {
    if (n < 0) throw domain_error("harmonic_number of negative index");
    static Memo<int, Rat> memo;
    Rat value = memo.get(n, [n] {
        Rat acc;
        for (int i = 1; i <= n; ++i) acc += Rat(1, BigInt(i));
        return acc;
    });
    if (auto d = fault::delta(FaultTable::harmonic, n)) value += *d;
    return value;
}

/// Hyperharmonic number at position `index` of order `order`:
/// 0 if index <= 0 or order < 0; 1/index if order = 0; otherwise the partial
/// sum of the order-1 values up to index.
inline Rat hyperharmonic_number(int index, int order) {
    if (index <= 0 || order < 0) return 0;
    if (order == 0) return Rat(1, BigInt(index));
    static Memo<std::pair<int, int>, Rat> memo;
    return memo.get({index, order}, [&] {
        // Iterate partial sums of the order-0 row; harmonic_number seeds order 1
        // so the H_n table is shared.
        std::vector<Rat> row(static_cast<std::size_t>(index));
        for (int i = 1; i <= index; ++i) row[static_cast<std::size_t>(i - 1)] = harmonic_number(i);
        for (int m = 2; m <= order; ++m) {
            Rat run;
            for (auto& v : row) {
                run += v;
                v = run;
            }
        }
        return row.back();
    });
}

/// H_r^(x) = sum_{t=1}^{r} binom(x + r - t - 1, r - t) / t; zero for r = 0.
inline Poly hyperharmonic_poly(int r) {
    if (r < 0) throw domain_error("hyperharmonic_poly of negative index");
    static Memo<int, Poly> memo;
    return memo.get(r, [r] {
        Poly acc;
        for (int t = 1; t <= r; ++t) acc += binom_poly(r - t - 1, r - t) / Rat(t);
        return acc;
    });
}

/// Negative-order hyperharmonic value at position `index` = j+1 and order
/// -order: 1 when j = 0, otherwise sum_{i=0}^{j} (-1)^i C(order, i)/(j+1-i).
inline Rat hyperharmonic_neg(int index, int order) {
    if (index < 1) throw domain_error("hyperharmonic_neg requires index >= 1");
    if (order < 1) throw domain_error("hyperharmonic_neg requires order >= 1");
    const int j = index - 1;
    if (j == 0) return 1;
    Rat acc;
    for (int i = 0; i <= j; ++i) acc += Rat(neg_one_pow(i) * binomial(order, i), BigInt(j + 1 - i));
    return acc;
}

/// Harmonic polynomial H_k(x) = sum_j (-1)^j/(k+1-j) binom(x-1, j); H_k(0) = H_{k+1}.
inline Poly harmonic_poly(int k) {
    if (k < 0) throw domain_error("harmonic_poly of negative index");
    static Memo<int, Poly> memo;
    return memo.get(k, [k] {
        Poly acc;
        for (int j = 0; j <= k; ++j) acc += binom_poly(-1, j) * Rat(neg_one_pow(j), BigInt(k + 1 - j));
        return acc;
    });
}

/// H_n^(p,r): H_n^(p,0) = n^(-p), H_n^(p,r) = sum_{m=1}^{n} H_m^(p,r-1).
inline Rat gen_hyperharmonic(int n, int p, int r) {
    if (n < 1) throw domain_error("gen_hyperharmonic requires n >= 1");
    if (r < 0) throw domain_error("gen_hyperharmonic requires r >= 0");
    std::vector<Rat> row(static_cast<std::size_t>(n));
    for (int m = 1; m <= n; ++m) {
        const BigInt power = ipow(BigInt(m), static_cast<unsigned long>(p >= 0 ? p : -p));
        row[static_cast<std::size_t>(m - 1)] = p >= 0 ? Rat(1, power) : Rat(power);
    }
    for (int level = 1; level <= r; ++level) {
        Rat run;
        for (auto& v : row) {
            run += v;
            v = run;
        }
    }
    return row.back();
}

/// Poly-Bernoulli number with negative index:
/// B_j^(-k) = (-1)^j sum_i (-1)^i i! {j i} (i+1)^k.
inline Rat polybernoulli_neg(int j, int k) {
    if (j < 0 || k < 0) throw domain_error("polybernoulli_neg requires j, k >= 0");
    BigInt acc;
    for (int i = 0; i <= j; ++i)
        acc += neg_one_pow(i) * factorial(i) * stirling2(j, i) * ipow(BigInt(i + 1), static_cast<unsigned long>(k));
    return Rat(BigInt(neg_one_pow(j) * acc));
}

}  // namespace daehee
