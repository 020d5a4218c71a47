#pragma once

// Exact integer number theory: modular exponentiation, multiplicative order,
// primality, prime enumeration and factorization. Everything is arbitrary
// precision end to end; quantities like (1-d)^{n+2} overflow 64 bits already
// for moderate (n, d).

#include <cstdint>
#include <optional>
#include <vector>

#include "hypaut/errors.hpp"

namespace hypaut {

enum class PrimalityCertainty { proven_prime, probable_prime, composite };

struct PrimalityResult {
    bool prime;
    PrimalityCertainty certainty;
};

struct PrimeFactor {
    Integer prime;
    unsigned exponent;

    bool operator==(const PrimeFactor&) const = default;
};

// value == sign * prod(prime^exponent), primes strictly increasing and each
// certified by is_prime. value = +-1 has an empty factor list.
struct Factorization {
    Integer value;
    int sign = 1;
    std::vector<PrimeFactor> factors;

    Integer recompose() const;
    std::vector<Integer> primes() const;
};

// Effort/size knobs. The factoring cap is the number of Brent-rho iterations
// allowed per composite cofactor; it is read from HYPAUT_EFFORT when set.
struct ArithLimits {
    static constexpr std::uint64_t kDefaultRhoIterations = 5'000'000;
    static constexpr std::uint64_t kMaxSieveHi = 1'000'000'000'000ULL;  // 10^12
    static constexpr std::uint64_t kMaxSieveSpan = 100'000'000ULL;      // 10^8

    std::uint64_t rho_iterations = kDefaultRhoIterations;

    static ArithLimits from_env();
};

// base^exp reduced to the canonical residue in [0, modulus); modulus >= 2.
Integer mod_pow(const Integer& base, const Integer& exp, const Integer& modulus);

// Canonical residue of v in [0, modulus).
Integer mod_canonical(const Integer& v, const Integer& modulus);

// Least l >= 1 with a^l == 1 (mod modulus), or nullopt when gcd(a, modulus) != 1.
std::optional<Integer> multiplicative_order(const Integer& a, const Integer& modulus);

// Deterministic Miller-Rabin below 2^64 (proven witness set), 40 independent
// strong rounds above (probable-prime). v >= 0.
PrimalityResult is_prime(const Integer& v);

// Exactly the primes in [lo, hi], segmented sieve. Caps: hi and hi-lo.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

// Complete factorization of v != 0: trial division to 10^6 followed by
// Brent rho with a seed derived from the input (deterministic). Throws
// effort_error carrying the unfactored cofactor when the cap is exceeded.
Factorization factorize(const Integer& v, const ArithLimits& limits = ArithLimits::from_env());

Integer binomial(unsigned n, unsigned k);
Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

// Multiplicative totient, via factorize.
Integer euler_totient(const Integer& n);

}  // namespace hypaut
