/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over Rat.
 *
 * Coefficients are stored in ascending degree; the zero polynomial has an
 * empty coefficient list and trailing zeros are always stripped, so two
 * polynomials are equal exactly when their coefficient vectors are.
 */
#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "rat.hpp"

namespace daehee {

class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { normalize(); }
    explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Poly constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }
    static Poly x() { return Poly{0, 1}; }
    static Poly monomial(const Rat& c, int degree) {
        if (degree < 0) throw domain_error("monomial of negative degree");
        std::vector<Rat> v(static_cast<std::size_t>(degree) + 1);
        v.back() = c;
        return Poly(std::move(v));
    }

    [[nodiscard]] std::span<const Rat> coeffs() const { return c_; }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return c_.empty(); }

    /// Coefficient of x^i; zero past the degree.
    [[nodiscard]] Rat operator[](int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(i)] : Rat{};
    }
    [[nodiscard]] Rat leading() const { return c_.empty() ? Rat{} : c_.back(); }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        normalize();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        normalize();
        return *this;
    }
    Poly& operator*=(const Rat& s) {
        if (s.is_zero()) {
            c_.clear();
            return *this;
        }
        for (auto& c : c_) c *= s;
        return *this;
    }
    Poly& operator/=(const Rat& s) {
        if (s.is_zero()) throw domain_error("polynomial divided by zero");
        for (auto& c : c_) c /= s;
        return *this;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(Poly a) { return a *= Rat(-1); }
    friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
    friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
    friend Poly operator/(Poly a, const Rat& s) { return a /= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(out));
    }

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rat> c_;
};

/// Horner evaluation.
inline Rat eval(const Poly& p, const Rat& v) {
    Rat acc;
    const auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc *= v;
        acc += *it;
    }
    return acc;
}

inline Poly derivative(const Poly& p) {
    const auto c = p.coeffs();
    if (c.size() <= 1) return {};
    std::vector<Rat> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * Rat(i);
    return Poly(std::move(out));
}

/// Antiderivative F with F(0) = 0.
inline Poly integral0(const Poly& p) {
    const auto c = p.coeffs();
    if (c.empty()) return {};
    std::vector<Rat> out(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) out[i + 1] = c[i] / Rat(i + 1);
    return Poly(std::move(out));
}

/// q(x) = p(a*x + b).
inline Poly compose_affine(const Poly& p, const Rat& a, const Rat& b) {
    const Poly inner{b, a};
    Poly acc;
    const auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * inner;
        acc += Poly::constant(*it);
    }
    return acc;
}

/// p(x + c)
inline Poly shift(const Poly& p, const Rat& c) { return compose_affine(p, 1, c); }

/// p(c - x)
inline Poly reflect(const Poly& p, const Rat& c) { return compose_affine(p, -1, c); }

/// binom(x + shift, k) as a polynomial in x: (x+shift)(x+shift-1)...(x+shift-k+1)/k!.
inline Poly binom_poly(long shift_by, int k) {
    if (k < 0) throw domain_error("binom_poly with negative k");
    Poly acc = Poly::constant(1);
    for (int i = 0; i < k; ++i) acc = acc * Poly{Rat(shift_by - i), 1};
    return acc / Rat(factorial(k));
}

/// (x)_k = x(x-1)...(x-k+1).
inline Poly falling_factorial_poly(int k) {
    if (k < 0) throw domain_error("falling factorial of negative order");
    Poly acc = Poly::constant(1);
    for (int i = 0; i < k; ++i) acc = acc * Poly{Rat(-i), 1};
    return acc;
}

/// binom(v, k) for rational v.
inline Rat binom_rat(const Rat& v, int k) {
    if (k < 0) throw domain_error("binom_rat with negative k");
    Rat acc = 1;
    for (int i = 0; i < k; ++i) acc *= v - Rat(i);
    return acc / Rat(factorial(k));
}

}  // namespace daehee
