#include "doctest.h"
#include "hypaut/arith.hpp"
#include "oracles.hpp"

#include <random>

using namespace hypaut;

TEST_CASE("mod_pow canonical residues") {
    // Oracle: repeated multiplication. (-2)^5 mod 11 = -32 + 33 = 1.
    CHECK(mod_pow(-2, 5, 11) == oracle::slow_pow_mod(-2, 5, 11));
    CHECK(mod_pow(-2, 5, 11) == 1);
    CHECK(mod_pow(7, 0, 13) == 1);
    // (-3)^5 = -243 = -4*61 + 1, so the residue is 1 (ord_61(-3) = 5).
    CHECK(mod_pow(-3, 5, 61) == oracle::slow_pow_mod(-3, 5, 61));
    CHECK(mod_pow(-3, 5, 61) == 1);
    CHECK(mod_pow(3, 5, 61) == 60);
    CHECK_THROWS_AS(mod_pow(2, 3, 1), std::domain_error);
    CHECK_THROWS_AS(mod_pow(2, 3, 0), std::domain_error);
}

TEST_CASE("multiplicative_order") {
    CHECK(multiplicative_order(-2, 11) == Integer(5));
    CHECK(multiplicative_order(1, 7) == Integer(1));
    CHECK_FALSE(multiplicative_order(-2, 4).has_value());

    // Successive powers of -2 mod 11: 9, 4, 3, 5, 1.
    Integer acc = 1;
    std::vector<Integer> powers;
    for (int i = 0; i < 5; ++i) {
        acc = mod_canonical(acc * -2, 11);
        powers.push_back(acc);
    }
    CHECK(powers == std::vector<Integer>{9, 4, 3, 5, 1});
}

TEST_CASE("multiplicative_order agrees with brute force") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        std::uint64_t m = rng() % 9998 + 2;
        std::int64_t a = static_cast<std::int64_t>(rng() % 20001) - 10000;
        auto expected = oracle::brute_force_order(a, m);
        auto got = multiplicative_order(a, m);
        CHECK(got == expected);
    }
}

TEST_CASE("is_prime examples") {
    auto r = is_prime(51828151);
    CHECK(r.prime);
    CHECK(r.certainty == PrimalityCertainty::proven_prime);
    CHECK_FALSE(is_prime(1).prime);
    CHECK(is_prime(1).certainty == PrimalityCertainty::composite);
    CHECK(is_prime(46441).prime);
    CHECK(is_prime(46441).certainty == PrimalityCertainty::proven_prime);
    CHECK_THROWS_AS(is_prime(-5), std::domain_error);
}

TEST_CASE("is_prime agrees with trial division") {
    for (std::uint64_t v = 0; v <= 20000; ++v)
        CHECK(is_prime(v).prime == oracle::trial_division_is_prime(v));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 3000; ++trial) {
        std::uint64_t v = rng() % 10'000'000;
        CHECK(is_prime(v).prime == oracle::trial_division_is_prime(v));
    }
}

TEST_CASE("is_prime above 2^64 reports probable primality") {
    // 2^89 - 1 is a Mersenne prime.
    Integer m89 = (Integer(1) << 89) - 1;
    auto r = is_prime(m89);
    CHECK(r.prime);
    CHECK(r.certainty == PrimalityCertainty::probable_prime);
    auto c = is_prime(m89 * ((Integer(1) << 61) - 1));
    CHECK_FALSE(c.prime);
}

TEST_CASE("primes_in_range") {
    CHECK(primes_in_range(2, 12) == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
    CHECK(primes_in_range(14, 16).empty());
    CHECK(primes_in_range(540, 550) == std::vector<std::uint64_t>{541, 547});
    CHECK_THROWS_AS(primes_in_range(10, 5), std::domain_error);
    CHECK_THROWS_AS(primes_in_range(0, ArithLimits::kMaxSieveHi + 1), resource_error);
    CHECK_THROWS_AS(primes_in_range(0, ArithLimits::kMaxSieveSpan + 10), resource_error);
}

TEST_CASE("primes_in_range agrees with trial division on windows") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        std::uint64_t lo = rng() % 999'000;
        std::uint64_t hi = lo + rng() % 1000;
        auto got = primes_in_range(lo, hi);
        auto expected = oracle::trial_division_primes(std::max<std::uint64_t>(lo, 2), hi);
        CHECK(got == expected);
    }
}

TEST_CASE("factorize examples") {
    Factorization f = factorize(-244);
    CHECK(f.sign == -1);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == PrimeFactor{2, 2});
    CHECK(f.factors[1] == PrimeFactor{61, 1});
    CHECK(f.recompose() == -244);

    CHECK(factorize(1).factors.empty());
    CHECK(factorize(1).sign == 1);
    CHECK(factorize(-1).factors.empty());
    CHECK(factorize(-1).sign == -1);

    Factorization g = factorize(63);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0] == PrimeFactor{3, 2});
    CHECK(g.factors[1] == PrimeFactor{7, 1});

    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("factorize recomposes and certifies") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        std::int64_t v = static_cast<std::int64_t>(rng() % 2'000'000'000) - 1'000'000'000;
        if (v == 0) v = 42;
        Factorization f = factorize(v);
        CHECK(f.recompose() == v);
        Integer prev = 0;
        for (const auto& pf : f.factors) {
            CHECK(pf.prime > prev);
            prev = pf.prime;
            CHECK(is_prime(pf.prime).prime);
        }
    }
    // A value that needs the rho stage: product of two 10-digit primes.
    Integer a("1000000007"), b("1000000009");
    Factorization f = factorize(a * b);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == a);
    CHECK(f.factors[1].prime == b);
}

TEST_CASE("factorize effort cap raises with cofactor") {
    Integer a("1000000007"), b("1000000009");
    ArithLimits limits;
    limits.rho_iterations = 0;
    try {
        factorize(a * b, limits);
        FAIL("expected effort_error");
    } catch (const effort_error& e) {
        CHECK(e.cofactor() == a * b);
    }
}

TEST_CASE("binomial and lcm") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(40, 20) == Integer("137846528820"));
    CHECK(lcm(6, 10) == 30);
    CHECK(lcm(0, 5) == 0);
    CHECK(lcm(-4, 6) == 12);
}

TEST_CASE("euler_totient matches counting") {
    for (std::uint64_t m = 1; m <= 300; ++m)
        CHECK(euler_totient(m) == oracle::count_coprime(m));
}
