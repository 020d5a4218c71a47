#include "hypaut/arith.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <string>

namespace hypaut {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod_u64(u64 base, u64 exp, u64 m) {
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod_u64(r, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return r;
}

// Strong probable-prime test to base a, n odd > 2.
bool strong_probable_prime_u64(u64 n, u64 a) {
    a %= n;
    if (a == 0) return true;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Deterministic for all n < 2^64 (first twelve primes as witnesses).
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
        if (!strong_probable_prime_u64(n, a)) return false;
    return true;
}

bool strong_probable_prime_big(const Integer& n, const Integer& a0) {
    Integer a = a0 % n;
    if (a == 0) return true;
    Integer d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    Integer x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return true;
    }
    return false;
}

const Integer kTwo64 = Integer(1) << 64;

// Primes below 10^6, for trial division and as sieve base. Built once.
const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = [] {
        constexpr u64 limit = 1'000'000;
        std::vector<bool> composite(limit + 1, false);
        std::vector<u64> out;
        for (u64 i = 2; i <= limit; ++i) {
            if (!composite[i]) {
                out.push_back(i);
                for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
            }
        }
        return out;
    }();
    return primes;
}

u64 brent_rho_u64(u64 n, std::uint64_t max_iters, u64 seed) {
    // Brent's cycle-finding variant of Pollard rho; n odd composite, not a
    // prime power of interest below the trial-division bound.
    std::mt19937_64 rng(seed);
    while (max_iters > 0) {
        u64 y = rng() % (n - 2) + 1;
        u64 c = rng() % (n - 2) + 1;
        u64 m = 128, g = 1, q = 1, x = 0, ys = 0, r = 1;
        while (g == 1 && max_iters > 0) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
            u64 k = 0;
            while (k < r && g == 1) {
                ys = y;
                u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim && max_iters > 0; ++i, --max_iters) {
                    y = (mulmod_u64(y, y, n) + c) % n;
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1 && max_iters > 0) {
                ys = (mulmod_u64(ys, ys, n) + c) % n;
                g = std::gcd(x > ys ? x - ys : ys - x, n);
                --max_iters;
            }
        }
        if (g != 1 && g != n) return g;
    }
    return 0;
}

Integer brent_rho_big(const Integer& n, std::uint64_t max_iters, u64 seed) {
    std::mt19937_64 rng(seed);
    while (max_iters > 0) {
        Integer y = Integer(rng()) % (n - 2) + 1;
        Integer c = Integer(rng()) % (n - 2) + 1;
        Integer x, ys, g = 1, q = 1;
        u64 r = 1, m = 64;
        while (g == 1 && max_iters > 0) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = (y * y + c) % n;
            u64 k = 0;
            while (k < r && g == 1) {
                ys = y;
                u64 lim = std::min(m, r - k);
                for (u64 i = 0; i < lim && max_iters > 0; ++i, --max_iters) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd(q, n);
                k += m;
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            while (g == 1 && max_iters > 0) {
                ys = (ys * ys + c) % n;
                g = gcd(abs(x - ys), n);
                --max_iters;
            }
        }
        if (g != 1 && g != n) return g;
    }
    return 0;
}

u64 seed_from(const Integer& v) {
    // Deterministic seed derived from the input value.
    u64 h = 0x9e3779b97f4a7c15ULL;
    for (unsigned limb = 0; limb < 4; ++limb) {
        Integer part = (v >> (64 * limb)) & 0xffffffffffffffffULL;
        h ^= static_cast<u64>(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

void factor_recursive(const Integer& n, std::map<Integer, unsigned>& out,
                      const ArithLimits& limits) {
    if (n == 1) return;
    if (is_prime(n).prime) {
        ++out[n];
        return;
    }
    Integer d;
    if (n < kTwo64) {
        u64 g = brent_rho_u64(static_cast<u64>(n), limits.rho_iterations, seed_from(n));
        if (g == 0)
            throw effort_error("factorize: effort cap (" + std::to_string(limits.rho_iterations) +
                                   " rho iterations, HYPAUT_EFFORT) exceeded; unfactored cofactor " +
                                   n.str(),
                               n);
        d = g;
    } else {
        d = brent_rho_big(n, limits.rho_iterations, seed_from(n));
        if (d == 0)
            throw effort_error("factorize: effort cap (" + std::to_string(limits.rho_iterations) +
                                   " rho iterations, HYPAUT_EFFORT) exceeded; unfactored cofactor " +
                                   n.str(),
                               n);
    }
    factor_recursive(d, out, limits);
    factor_recursive(n / d, out, limits);
}

}  // namespace

ArithLimits ArithLimits::from_env() {
    ArithLimits limits;
    if (const char* env = std::getenv("HYPAUT_EFFORT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') limits.rho_iterations = v;
    }
    return limits;
}

Integer mod_canonical(const Integer& v, const Integer& modulus) {
    if (modulus < 2) throw std::domain_error("mod_canonical: modulus must be >= 2");
    Integer r = v % modulus;
    if (r < 0) r += modulus;
    return r;
}

Integer mod_pow(const Integer& base, const Integer& exp, const Integer& modulus) {
    if (modulus < 2) throw std::domain_error("mod_pow: modulus must be >= 2");
    if (exp < 0) throw std::domain_error("mod_pow: exponent must be nonnegative");
    return boost::multiprecision::powm(mod_canonical(base, modulus), exp, modulus);
}

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
    if (a == 0 || b == 0) return 0;
    return abs(a / gcd(a, b) * b);
}

std::optional<Integer> multiplicative_order(const Integer& a, const Integer& modulus) {
    Integer r = mod_canonical(a, modulus);
    if (gcd(r, modulus) != 1) return std::nullopt;
    // ord(a) divides the group order phi(m): start from phi(m) and strip
    // each prime of it while the power still fixes 1.
    Integer phi = euler_totient(modulus);
    Integer order = phi;
    for (const auto& pf : factorize(phi).factors) {
        for (unsigned e = 0; e < pf.exponent; ++e) {
            if (mod_pow(r, order / pf.prime, modulus) == 1)
                order /= pf.prime;
            else
                break;
        }
    }
    return order;
}

PrimalityResult is_prime(const Integer& v) {
    if (v < 0) throw std::domain_error("is_prime: value must be nonnegative");
    if (v < 2) return {false, PrimalityCertainty::composite};
    if (v < kTwo64) {
        bool p = is_prime_u64(static_cast<u64>(v));
        return {p, p ? PrimalityCertainty::proven_prime : PrimalityCertainty::composite};
    }
    if ((v & 1) == 0) return {false, PrimalityCertainty::composite};
    for (u64 p : small_primes()) {
        if (p > 1000) break;
        if (v % p == 0) return {false, PrimalityCertainty::composite};
    }
    std::mt19937_64 rng(seed_from(v));
    for (int round = 0; round < 40; ++round) {
        Integer a = Integer(rng()) % (v - 3) + 2;
        if (!strong_probable_prime_big(v, a)) return {false, PrimalityCertainty::composite};
    }
    return {true, PrimalityCertainty::probable_prime};
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
    if (lo > hi) throw std::domain_error("primes_in_range: lo > hi");
    if (hi > ArithLimits::kMaxSieveHi)
        throw resource_error("primes_in_range: hi exceeds cap kMaxSieveHi = " +
                             std::to_string(ArithLimits::kMaxSieveHi));
    if (hi - lo > ArithLimits::kMaxSieveSpan)
        throw resource_error("primes_in_range: span exceeds cap kMaxSieveSpan = " +
                             std::to_string(ArithLimits::kMaxSieveSpan));
    if (hi < 2) return {};
    lo = std::max<u64>(lo, 2);

    // Base primes to 10^6 cover every hi below kMaxSieveHi = 10^12.
    std::vector<bool> composite(hi - lo + 1, false);
    for (u64 p : small_primes()) {
        if (p * p > hi) break;
        u64 start = std::max(p * p, (lo + p - 1) / p * p);
        for (u64 j = start; j <= hi; j += p) composite[j - lo] = true;
    }
    std::vector<u64> out;
    for (u64 v = lo; v <= hi; ++v)
        if (!composite[v - lo]) out.push_back(v);
    return out;
}

Factorization factorize(const Integer& v, const ArithLimits& limits) {
    if (v == 0) throw std::domain_error("factorize: value must be nonzero");
    Factorization f;
    f.value = v;
    f.sign = v < 0 ? -1 : 1;
    Integer n = abs(v);
    std::map<Integer, unsigned> acc;
    for (u64 p : small_primes()) {
        if (Integer(p) * p > n) break;
        while (n % p == 0) {
            ++acc[Integer(p)];
            n /= p;
        }
    }
    if (n > 1) factor_recursive(n, acc, limits);
    for (auto& [p, e] : acc) f.factors.push_back({p, e});
    return f;
}

Integer Factorization::recompose() const {
    Integer r = sign;
    for (const auto& pf : factors)
        r *= boost::multiprecision::pow(pf.prime, pf.exponent);
    return r;
}

std::vector<Integer> Factorization::primes() const {
    std::vector<Integer> out;
    out.reserve(factors.size());
    for (const auto& pf : factors) out.push_back(pf.prime);
    return out;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact: r is binomial(n-k+i, i) after this step
    }
    return r;
}

Integer euler_totient(const Integer& n) {
    if (n <= 0) throw std::domain_error("euler_totient: value must be positive");
    Integer phi = n;
    for (const auto& pf : factorize(n).factors) {
        phi /= pf.prime;
        phi *= pf.prime - 1;
    }
    return phi;
}

}  // namespace hypaut
