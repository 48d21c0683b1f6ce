#pragma once

#include "delsarte/integer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace delsarte {

// m-th cyclotomic polynomial, coefficients ascending, computed by iterated
// exact division of x^m - 1 by Phi_d over the proper divisors d of m
std::vector<Integer> cyclotomic_polynomial(long m);

// Exact element of Z[zeta_m], stored as a length-m coefficient vector modulo
// zeta^m - 1.  Ring operations stay in this cheap representation; reduction
// modulo Phi_m happens only for equality tests and integer extraction.
class CyclotomicInt {
public:
    explicit CyclotomicInt(long m);  // zero element
    static CyclotomicInt from_integer(long m, Integer n);
    static CyclotomicInt zeta_power(long m, long k);
    static CyclotomicInt from_counts(long m, std::vector<Integer> counts);

    long conductor() const { return m_; }
    const std::vector<Integer>& coeffs() const { return c_; }

    CyclotomicInt operator+(const CyclotomicInt& o) const;
    CyclotomicInt operator-(const CyclotomicInt& o) const;
    CyclotomicInt operator*(const CyclotomicInt& o) const;
    CyclotomicInt operator-() const;

    // Galois conjugation zeta -> zeta^k; requires gcd(k, m) = 1
    CyclotomicInt conj(long k) const;

    // coefficients of the canonical representative modulo Phi_m (ascending,
    // length phi(m); trailing zeros trimmed)
    std::vector<Integer> reduced() const;

    // equality in Z[zeta_m]: the difference reduces to 0 modulo Phi_m
    bool operator==(const CyclotomicInt& o) const;
    bool operator!=(const CyclotomicInt& o) const { return !(*this == o); }

    // n if this element equals the rational integer n, otherwise absent
    std::optional<Integer> as_rational_integer() const;

    std::string to_string() const;

private:
    long m_;
    std::vector<Integer> c_;
};

}  // namespace delsarte
