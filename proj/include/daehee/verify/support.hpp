/**
 * @file support.hpp
 * @brief Small building blocks for writing identity checks.
 */
#pragma once

#include <algorithm>
#include <string>
#include <utility>

#include "../poly.hpp"
#include "../rat.hpp"
#include "../sequences.hpp"
#include "../stirling.hpp"
#include "check.hpp"

namespace daehee::verify::support {

inline Rat fact(int n) { return Rat(factorial(n)); }
inline Rat sign(long n) { return Rat(neg_one_pow(n)); }
inline Rat delta(long a, long b) { return Rat(kronecker(a, b)); }
inline Rat frac(long p, long q) { return Rat(BigInt(p), BigInt(q)); }

inline Rat s1u(int n, int k) { return Rat(stirling1_unsigned(n, k)); }
inline Rat s1s(int n, int k) { return Rat(stirling1_signed(n, k)); }
inline Rat s2u(int n, int k) { return Rat(stirling2(n, k)); }
inline Rat s2s(int n, int k) { return Rat(stirling2_signed(n, k)); }
inline Rat rs1u(int n, int k, int r) { return Rat(rstirling1(n, k, r)); }
inline Rat rs1s(int n, int k, int r) { return Rat(rstirling1_signed(n, k, r)); }
inline Rat rs2u(int n, int k, int r) { return Rat(rstirling2(n, k, r)); }
inline Rat rs2s(int n, int k, int r) { return Rat(rstirling2_signed(n, k, r)); }

inline Rat binom(long n, long k) { return Rat(binomial(n, k)); }
inline Rat H(int n) { return harmonic_number(n); }

inline Poly constant(const Rat& c) { return Poly::constant(c); }

/// d/dx binom(x + shift, k)
inline Poly dbinom(long shift_by, int k) { return derivative(binom_poly(shift_by, k)); }

/// H_index^(a*x + b)
inline Poly hyper_at(int index, const Rat& a, const Rat& b) {
    return compose_affine(hyperharmonic_poly(index), a, b);
}

/// H_k(a*x + b)
inline Poly harmonic_at(int k, const Rat& a, const Rat& b) { return compose_affine(harmonic_poly(k), a, b); }

template <class F>
Poly poly_sum(int lo, int hi, F&& term) {
    Poly acc;
    for (int i = lo; i <= hi; ++i) acc += term(i);
    return acc;
}

template <class F>
Rat rat_sum(int lo, int hi, F&& term) {
    Rat acc;
    for (int i = lo; i <= hi; ++i) acc += term(i);
    return acc;
}

/// Upper bound for loops over r >= 1.
inline int r_hi(const Ranges& g) { return std::max(1, g.max_r); }

inline Ranges single_sum() { return Ranges{}; }
inline Ranges double_sum() {
    Ranges r;
    r.max_k = 12;
    return r;
}

inline IdentityCheck make(std::string id, std::string description, Suite suite, CheckMode mode, Ranges defaults,
                          std::function<void(const Ranges&, Recorder&)> body) {
    return IdentityCheck{std::move(id), std::move(description), suite, mode, std::move(defaults), std::move(body)};
}

}  // namespace daehee::verify::support
