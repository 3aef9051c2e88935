/**
 * @file rat.hpp
 * @brief Exact rationals and arbitrary-precision integers.
 *
 * Rat is a thin value wrapper over GMP's mpq_class. Every constructor and
 * arithmetic result is canonicalized, so the representation is unique:
 * denominator > 0, gcd(|num|, den) = 1, zero is 0/1. Structural equality is
 * therefore value equality.
 */
#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace daehee {

using BigInt = mpz_class;

class Rat {
public:
    Rat() = default;

    template <std::signed_integral I>
    Rat(I v) : v_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    template <std::unsigned_integral I>
    Rat(I v) : v_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

    Rat(const BigInt& v) : v_(v) {}  // NOLINT(google-explicit-constructor)

    Rat(const BigInt& num, const BigInt& den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "p", "-p" or "p/q" (whitespace not allowed).
    static Rat parse(std::string_view text) {
        const std::string s(text);
        if (s.empty()) throw domain_error("empty rational literal");
        const auto slash = s.find('/');
        auto parse_int = [&](const std::string& part) {
            BigInt out;
            const bool ok = !part.empty() && part != "-" && part != "+" &&
                            out.set_str(part[0] == '+' ? part.substr(1) : part, 10) == 0;
            if (!ok) throw domain_error("malformed rational literal: " + s);
            return out;
        };
        if (slash == std::string::npos) return Rat(parse_int(s));
        return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    }

    [[nodiscard]] BigInt num() const { return v_.get_num(); }
    [[nodiscard]] BigInt den() const { return v_.get_den(); }
    [[nodiscard]] const mpq_class& gmp() const { return v_; }

    [[nodiscard]] bool is_zero() const { return sgn(v_) == 0; }
    [[nodiscard]] bool is_integer() const { return v_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(v_); }

    /// Canonical text form: "p/q", or "p" when q = 1.
    [[nodiscard]] std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

private:
    explicit Rat(mpq_class v) : v_(std::move(v)) {}
    mpq_class v_;
};

/// p/q in lowest terms with positive denominator; q = 0 is a domain error.
inline Rat rat(const BigInt& p, const BigInt& q) { return Rat(p, q); }

inline BigInt factorial(int n) {
    if (n < 0) throw domain_error("factorial of a negative integer");
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

/// Ordinary binomial coefficient C(n, k) for integer n (any sign) and k >= 0;
/// 0 for k < 0.
inline BigInt binomial(long n, long k) {
    if (k < 0) return 0;
    BigInt out;
    const BigInt top(n);
    mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

inline BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
    return out;
}

/// (-1)^n
inline int neg_one_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

inline int kronecker(long a, long b) { return a == b ? 1 : 0; }

}  // namespace daehee
