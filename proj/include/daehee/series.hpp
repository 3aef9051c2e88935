/**
 * @file series.hpp
 * @brief Truncated formal power series over Rat and the generating-function builder.
 *
 * A TruncSeries of order N stores exactly the coefficients of t^0..t^N.
 * Binary operations require equal orders. Dividing by t (shift_div_t) lowers
 * the order by one, so gf_build evaluates such factors one order higher to
 * return a series of the requested order.
 */
#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "poly.hpp"
#include "rat.hpp"

namespace daehee {

class TruncSeries {
public:
    explicit TruncSeries(int order) : c_(check(order) + 1) {}
    explicit TruncSeries(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw domain_error("series needs at least one coefficient");
    }

    static TruncSeries one(int order) {
        TruncSeries s(order);
        s.c_[0] = 1;
        return s;
    }

    [[nodiscard]] int order() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] const std::vector<Rat>& coeffs() const { return c_; }

    [[nodiscard]] const Rat& operator[](int n) const {
        if (n < 0 || n > order()) throw range_error("series coefficient index out of range");
        return c_[static_cast<std::size_t>(n)];
    }
    Rat& operator[](int n) {
        if (n < 0 || n > order()) throw range_error("series coefficient index out of range");
        return c_[static_cast<std::size_t>(n)];
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        same_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        same_order(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    TruncSeries& operator*=(const Rat& s) {
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator-(TruncSeries a) { return a *= Rat(-1); }
    friend TruncSeries operator*(TruncSeries a, const Rat& s) { return a *= s; }
    friend TruncSeries operator*(const Rat& s, TruncSeries a) { return a *= s; }

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

    void same_order(const TruncSeries& o) const {
        if (o.order() != order()) throw domain_error("series orders differ");
    }

private:
    static std::size_t check(int order) {
        if (order < 0) throw domain_error("negative series order");
        return static_cast<std::size_t>(order);
    }

    std::vector<Rat> c_;
};

/// ln(1 + sign*t) to order N.
inline TruncSeries series_log1p(int sign, int order) {
    if (sign != 1 && sign != -1) throw domain_error("series sign must be +1 or -1");
    TruncSeries s(order);
    for (int n = 1; n <= order; ++n) {
        // (-1)^(n+1) (sign)^n / n
        const int sg = neg_one_pow(n + 1) * (sign == 1 ? 1 : neg_one_pow(n));
        s[n] = Rat(sg) / Rat(n);
    }
    return s;
}

/// (1 + sign*t)^a = sum_n binom(a, n) (sign*t)^n.
inline TruncSeries series_binom_pow(const Rat& a, int sign, int order) {
    if (sign != 1 && sign != -1) throw domain_error("series sign must be +1 or -1");
    TruncSeries s(order);
    Rat coeff = 1;  // binom(a, n) built incrementally
    for (int n = 0; n <= order; ++n) {
        s[n] = (sign == -1 && n % 2 != 0) ? -coeff : coeff;
        coeff *= (a - Rat(n)) / Rat(n + 1);
    }
    return s;
}

/// exp(a*t).
inline TruncSeries series_exp(const Rat& a, int order) {
    TruncSeries s(order);
    Rat term = 1;
    for (int n = 0; n <= order; ++n) {
        s[n] = term;
        term *= a / Rat(n + 1);
    }
    return s;
}

inline TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
    a.same_order(b);
    const int n_max = a.order();
    TruncSeries out(n_max);
    for (int i = 0; i <= n_max; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= n_max; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// a / b by forward substitution; b(0) must be nonzero.
inline TruncSeries series_div(const TruncSeries& a, const TruncSeries& b) {
    a.same_order(b);
    if (b[0].is_zero()) throw domain_error("series division by a series with zero constant term");
    const int n_max = a.order();
    TruncSeries q(n_max);
    for (int n = 0; n <= n_max; ++n) {
        Rat acc = a[n];
        for (int j = 1; j <= n; ++j) acc -= b[j] * q[n - j];
        q[n] = acc / b[0];
    }
    return q;
}

inline TruncSeries series_pow_int(const TruncSeries& a, int m) {
    if (m < 0) throw domain_error("negative series power");
    TruncSeries acc = TruncSeries::one(a.order());
    TruncSeries base = a;
    while (m > 0) {
        if (m & 1) acc = series_mul(acc, base);
        m >>= 1;
        if (m > 0) base = series_mul(base, base);
    }
    return acc;
}

/// a(t)/t; requires a(0) = 0 and returns a series one order lower.
inline TruncSeries series_shift_div_t(const TruncSeries& a) {
    if (!a[0].is_zero()) throw domain_error("shift_div_t on a series with nonzero constant term");
    if (a.order() == 0) throw domain_error("shift_div_t on an order-0 series");
    std::vector<Rat> c(a.coeffs().begin() + 1, a.coeffs().end());
    return TruncSeries(std::move(c));
}

/// k! [t^k] s.
inline Rat egf_coeff(const TruncSeries& s, int k) {
    if (k < 0 || k > s.order()) throw range_error("egf_coeff index beyond series order");
    return s[k] * Rat(factorial(k));
}

// ---------------------------------------------------------------------------
// Generating functions

namespace gf {

/// ln(1+t)/t * (1+t)^x  -- EGF of D_k(x)
struct Daehee1 { Rat x; };
/// ln(1-t)/(-t) * (1-t)^(1-x)  -- EGF of the second-kind polynomials
struct Daehee2 { Rat x; };
/// -ln(1-t)/(1-t)  -- OGF of H_n
struct Harmonic {};
/// -ln(1-t)/(1-t)^x  -- OGF of the hyperharmonic polynomials H_n^(x)
struct Hyperharmonic { Rat x; };
/// -ln(1-t) / (t (1-t)^(1-x))  -- OGF of the harmonic polynomials H_k(x)
struct HarmonicPoly { Rat x; };
/// ln(1+t)^k / k!  -- EGF of the signed first-kind column k
struct Stirling1 { int k; };
/// (e^t - 1)^k / k!  -- EGF of the second-kind column k
struct Stirling2 { int k; };
/// (1-t)^(-r) (-ln(1-t))^k / k!  -- EGF of [n+r k+r]_r in n
struct RStirling1 { int k; int r; };
/// e^(rt) (e^t - 1)^k / k!  -- EGF of {n+r k+r}_r in n
struct RStirling2 { int k; int r; };
/// (ln(1+t)/t)^r  -- OGF of b_j^(-r)
struct NorlundNeg { int r; };
/// t e^(xt) / (e^t - 1)  -- EGF of B_k(x)
struct Bernoulli { Rat x; };
/// (ln(1+t)/t)^r (1+t)^x  -- EGF of D_k^(r)(x)
struct DaeheeOrder { Rat x; int r; };

}  // namespace gf

using GfSelector = std::variant<gf::Daehee1, gf::Daehee2, gf::Harmonic, gf::Hyperharmonic, gf::HarmonicPoly,
                                gf::Stirling1, gf::Stirling2, gf::RStirling1, gf::RStirling2, gf::NorlundNeg,
                                gf::Bernoulli, gf::DaeheeOrder>;

namespace detail {

inline TruncSeries log1p_over_t(int sign, int order) { return series_shift_div_t(series_log1p(sign, order + 1)); }

inline TruncSeries expm1(int order) {
    TruncSeries s = series_exp(1, order);
    s[0] = 0;
    return s;
}

inline TruncSeries column_power(const TruncSeries& base, int k) {
    if (k < 0) throw domain_error("negative Stirling column");
    return series_pow_int(base, k) * Rat(1, factorial(k));
}

template <class... F>
struct overloaded : F... { using F::operator()...; };
template <class... F>
overloaded(F...) -> overloaded<F...>;

}  // namespace detail

inline TruncSeries gf_build(const GfSelector& which, int order) {
    using namespace detail;
    if (order < 0) throw domain_error("negative series order");
    return std::visit(
        overloaded{
            [&](const gf::Daehee1& g) {
                return series_mul(log1p_over_t(1, order), series_binom_pow(g.x, 1, order));
            },
            [&](const gf::Daehee2& g) {
                return series_mul(-log1p_over_t(-1, order), series_binom_pow(Rat(1) - g.x, -1, order));
            },
            [&](const gf::Harmonic&) {
                return series_mul(-series_log1p(-1, order), series_binom_pow(-1, -1, order));
            },
            [&](const gf::Hyperharmonic& g) {
                return series_mul(-series_log1p(-1, order), series_binom_pow(-g.x, -1, order));
            },
            [&](const gf::HarmonicPoly& g) {
                return series_mul(-log1p_over_t(-1, order), series_binom_pow(g.x - Rat(1), -1, order));
            },
            [&](const gf::Stirling1& g) { return column_power(series_log1p(1, order), g.k); },
            [&](const gf::Stirling2& g) { return column_power(expm1(order), g.k); },
            [&](const gf::RStirling1& g) {
                if (g.r < 0) throw domain_error("negative r");
                return series_mul(series_binom_pow(-g.r, -1, order), column_power(-series_log1p(-1, order), g.k));
            },
            [&](const gf::RStirling2& g) {
                if (g.r < 0) throw domain_error("negative r");
                return series_mul(series_exp(g.r, order), column_power(expm1(order), g.k));
            },
            [&](const gf::NorlundNeg& g) {
                if (g.r < 0) throw domain_error("negative r");
                return series_pow_int(log1p_over_t(1, order), g.r);
            },
            [&](const gf::Bernoulli& g) {
                // e^t - 1 = t * (1 + t/2 + ...), so t/(e^t - 1) = 1 / ((e^t - 1)/t)
                const TruncSeries denom = series_shift_div_t(expm1(order + 1));
                return series_mul(series_div(TruncSeries::one(order), denom), series_exp(g.x, order));
            },
            [&](const gf::DaeheeOrder& g) {
                if (g.r < 0) throw domain_error("negative r");
                return series_mul(series_pow_int(log1p_over_t(1, order), g.r), series_binom_pow(g.x, 1, order));
            },
        },
        which);
}

}  // namespace daehee
