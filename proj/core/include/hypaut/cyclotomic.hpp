#pragma once

// Dense integer-coefficient univariate polynomials and the cyclotomic
// polynomials Phi_m, computed by exact division through the identity
// t^m - 1 = prod_{r|m} Phi_r(t). No floating point anywhere.

#include <vector>

#include "hypaut/arith.hpp"

namespace hypaut {

// coefficients[k] is the coefficient of t^k; canonical form stores no
// leading zeros (the zero polynomial has an empty vector).
struct IntPolynomial {
    std::vector<Integer> coefficients;

    static IntPolynomial zero() { return {}; }
    static IntPolynomial from_coefficients(std::vector<Integer> c);

    bool is_zero() const { return coefficients.empty(); }
    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    void normalize();

    bool operator==(const IntPolynomial&) const = default;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_sub(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);

// Exact division; throws inconsistency_error if the remainder is nonzero.
IntPolynomial poly_div_exact(const IntPolynomial& num, const IntPolynomial& den);

// t^m - 1.
IntPolynomial power_minus_one(unsigned m);

// The m-th cyclotomic polynomial. Memoized internally (behaviour is as if
// the memo were absent; safe under concurrent use). Degree cap: totient(m)
// must not exceed kMaxCyclotomicDegree.
inline constexpr unsigned kMaxCyclotomicDegree = 4096;
IntPolynomial cyclotomic_poly(unsigned m);

// Exact p(x) by Horner evaluation.
Integer eval_int(const IntPolynomial& p, const Integer& x);

// Checks Phi_{q^r}(t) == Phi_q(t^{q^{r-1}}) coefficient-wise; q prime.
bool prime_power_identity_check(unsigned q, unsigned r);

}  // namespace hypaut
