#pragma once

// Independent brute-force oracles used to pin expected values. These must
// stay independent of the implementation paths they check: trial division
// only, repeated multiplication only, odometer enumeration only.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "hypaut/arith.hpp"

namespace oracle {

using hypaut::Integer;

inline bool trial_division_is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t p = 2; p * p <= v; ++p)
        if (v % p == 0) return false;
    return true;
}

inline std::vector<std::uint64_t> trial_division_primes(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = lo; v <= hi && v >= lo; ++v)
        if (trial_division_is_prime(v)) out.push_back(v);
    return out;
}

// Repeated multiplication, no squaring tricks.
inline Integer slow_pow_mod(Integer base, std::uint64_t exp, const Integer& modulus) {
    base %= modulus;
    if (base < 0) base += modulus;
    Integer acc = 1 % modulus;
    for (std::uint64_t i = 0; i < exp; ++i) acc = acc * base % modulus;
    return acc;
}

// Successive powers until 1 appears, bounded by the group size.
inline std::optional<Integer> brute_force_order(const Integer& a, const Integer& modulus) {
    Integer r = a % modulus;
    if (r < 0) r += modulus;
    if (hypaut::gcd(r, modulus) != 1) return std::nullopt;
    Integer acc = r;
    for (Integer l = 1; l <= modulus; ++l) {
        if (acc == 1) return l;
        acc = acc * r % modulus;
    }
    return std::nullopt;  // unreachable for valid inputs
}

// Totient by definition.
inline std::uint64_t count_coprime(std::uint64_t m) {
    std::uint64_t c = 0;
    for (std::uint64_t a = 1; a <= m; ++a)
        if (std::gcd(a, m) == 1) ++c;
    return c;
}

// Trial-division-only factorization for small values.
inline std::vector<std::pair<std::uint64_t, unsigned>> trial_division_factorize(std::uint64_t v) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t p = 2; p * p <= v; ++p) {
        unsigned e = 0;
        while (v % p == 0) {
            v /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (v > 1) out.emplace_back(v, 1);
    return out;
}

}  // namespace oracle
