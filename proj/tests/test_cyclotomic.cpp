#include "doctest.h"
#include "hypaut/cyclotomic.hpp"
#include "oracles.hpp"

using namespace hypaut;

namespace {

IntPolynomial poly(std::initializer_list<int> coeffs_low_to_high) {
    std::vector<Integer> c;
    for (int v : coeffs_low_to_high) c.emplace_back(v);
    return IntPolynomial::from_coefficients(std::move(c));
}

}  // namespace

TEST_CASE("small cyclotomic polynomials") {
    CHECK(cyclotomic_poly(1) == poly({-1, 1}));
    CHECK(cyclotomic_poly(2) == poly({1, 1}));
    CHECK(cyclotomic_poly(4) == poly({1, 0, 1}));
    CHECK(cyclotomic_poly(7) == poly({1, 1, 1, 1, 1, 1, 1}));
    CHECK(cyclotomic_poly(12) == poly({1, 0, -1, 0, 1}));
    CHECK_THROWS_AS(cyclotomic_poly(0), std::domain_error);
}

TEST_CASE("degree equals totient") {
    for (unsigned m = 1; m <= 200; ++m)
        CHECK(cyclotomic_poly(m).degree() == static_cast<int>(oracle::count_coprime(m)));
}

TEST_CASE("divisor product identity") {
    for (unsigned m = 1; m <= 200; ++m) {
        IntPolynomial prod{{Integer(1)}};
        for (unsigned r = 1; r <= m; ++r)
            if (m % r == 0) prod = poly_mul(prod, cyclotomic_poly(r));
        CHECK(prod == power_minus_one(m));
    }
}

TEST_CASE("eval_int pins the extremal primes") {
    CHECK(eval_int(cyclotomic_poly(5), -2) == 11);
    CHECK(eval_int(cyclotomic_poly(4), -4) == 17);
    CHECK(eval_int(cyclotomic_poly(11), -6) == 51828151);
    CHECK(eval_int(cyclotomic_poly(1), 9) == 8);
    CHECK(eval_int(IntPolynomial::zero(), 3) == 0);
}

TEST_CASE("cyclotomic values divide x^m - 1") {
    for (unsigned m = 1; m <= 200; ++m) {
        IntPolynomial phi = cyclotomic_poly(m);
        for (int x = -9; x <= -2; ++x) {
            Integer v = eval_int(phi, x);
            Integer whole = boost::multiprecision::pow(Integer(x), m) - 1;
            REQUIRE(v != 0);
            CHECK(whole % v == 0);
        }
    }
}

TEST_CASE("prime power identity") {
    CHECK(prime_power_identity_check(2, 2));
    CHECK(prime_power_identity_check(3, 2));
    CHECK(prime_power_identity_check(5, 1));
    CHECK(prime_power_identity_check(2, 5));
    CHECK(prime_power_identity_check(7, 3));
    CHECK_THROWS_AS(prime_power_identity_check(6, 2), std::domain_error);
    CHECK_THROWS_AS(prime_power_identity_check(3, 0), std::domain_error);
}

TEST_CASE("paper inequalities for Phi_q(1-d)") {
    // (d-1)^{q-2} < Phi_q(1-d) < (d-1)^{q-1} for odd primes q.
    for (unsigned q : {3u, 5u, 7u, 11u, 13u, 17u, 19u}) {
        IntPolynomial phi = cyclotomic_poly(q);
        for (int d = 3; d <= 9; ++d) {
            Integer v = eval_int(phi, Integer(1) - d);
            CHECK(v > boost::multiprecision::pow(Integer(d - 1), q - 2));
            CHECK(v < boost::multiprecision::pow(Integer(d - 1), q - 1));
        }
    }
}

TEST_CASE("exact polynomial division guards") {
    CHECK_THROWS_AS(poly_div_exact(poly({1, 1}), IntPolynomial::zero()), std::domain_error);
    CHECK_THROWS_AS(poly_div_exact(poly({1, 1, 1}), poly({0, 0, 0, 1})), inconsistency_error);
    CHECK_THROWS_AS(poly_div_exact(poly({1, 3, 1}), poly({1, 1})), inconsistency_error);
    CHECK(poly_div_exact(poly({-1, 0, 1}), poly({1, 1})) == poly({-1, 1}));
}

TEST_CASE("degree cap") {
    CHECK_THROWS_AS(cyclotomic_poly(65537), resource_error);  // totient 65536 > cap
}
