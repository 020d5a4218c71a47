#include "doctest.h"
#include "hypaut/forms.hpp"
#include "hypaut/json_io.hpp"
#include "oracles.hpp"

#include <cmath>
#include <random>
#include <set>

using namespace hypaut;

namespace {

Monomial mon(std::initializer_list<unsigned> exps) { return Monomial{exps}; }

Signature sig(long long q, std::initializer_list<long long> vals) {
    Signature s{Integer(q), {}};
    for (long long v : vals) s.sigma.emplace_back(v);
    return s;
}

// The definition the implementation's formula must match: minimum over
// scalar shifts c of the lcm of additive orders of sigma_i + c in Z_q.
Integer brute_force_projective_order(const Signature& s) {
    Integer best = 0;
    for (Integer c = 0; c < s.q; ++c) {
        Integer l = 1;
        for (const Integer& v : s.sigma) {
            Integer a = mod_canonical(v + c, s.q);
            l = lcm(l, a == 0 ? Integer(1) : s.q / gcd(a, s.q));
        }
        if (best == 0 || l < best) best = l;
    }
    return best;
}

}  // namespace

TEST_CASE("weight") {
    Signature s = sig(11, {1, 9, 4, 3, 5});
    CHECK(weight(mon({0, 1, 1, 1, 1}), s) == 10);
    CHECK(weight(mon({2, 1, 0, 0, 0}), s) == 0);
    Signature zero = sig(7, {0, 0, 0, 0});
    CHECK(weight(mon({3, 0, 0, 0}), zero) == 0);
    CHECK_THROWS_AS(weight(mon({1, 2}), s), std::domain_error);
}

TEST_CASE("grlex order") {
    CHECK(grlex_greater(mon({2, 0, 0}), mon({1, 1, 0})));
    CHECK(grlex_greater(mon({1, 1, 0}), mon({1, 0, 1})));
    CHECK(grlex_greater(mon({0, 0, 3}), mon({0, 2, 0})));  // degree first
    CHECK_FALSE(grlex_greater(mon({1, 0, 1}), mon({1, 0, 1})));
}

TEST_CASE("is_invariant") {
    Witness klein33 = klein_form(3, 3, 11);
    CHECK(is_invariant(klein33.form, klein33.signature));

    Witness fermat = fermat_form(2, 3);
    CHECK(is_invariant(fermat.form, fermat.signature));
    Signature off = sig(4, {1, 0, 0, 0});  // q = d+1
    CHECK_FALSE(is_invariant(fermat.form, off));
}

TEST_CASE("min_variable_degree") {
    CHECK(min_variable_degree(klein_form(2, 3, 5).form) == std::pair<int, int>{0, 2});
    CHECK(min_variable_degree(fermat_form(2, 3).form) == std::pair<int, int>{0, 3});

    // x_1^3 + x_2^3 + x_3^3 misses x_0 entirely: singular at (1:0:0:0).
    Form f{2, 3, {}};
    for (int i = 1; i < 4; ++i) {
        Monomial m{std::vector<unsigned>(4, 0)};
        m.exponents[i] = 3;
        f.add_term(std::move(m), 1);
    }
    CHECK(min_variable_degree(f) == std::pair<int, int>{0, 0});
    CHECK_THROWS_AS(min_variable_degree(Form{2, 3, {}}), std::domain_error);
}

TEST_CASE("klein_form(2,3,5) matches the worked example") {
    Witness w = klein_form(2, 3, 5);
    CHECK(w.signature == sig(5, {1, 3, 4, 2}));  // powers of -2 mod 5
    CHECK(w.order == 5);
    CHECK(w.family == WitnessFamily::klein);
    Form expected{2, 3, {}};
    expected.add_term(mon({2, 1, 0, 0}), 1);
    expected.add_term(mon({0, 2, 1, 0}), 1);
    expected.add_term(mon({0, 0, 2, 1}), 1);
    expected.add_term(mon({1, 0, 0, 2}), 1);
    CHECK(w.form == expected);
}

TEST_CASE("fermat and chain constructors") {
    Witness f = fermat_form(2, 3);
    CHECK(f.order == 3);
    CHECK(f.form.terms.size() == 4);
    CHECK(f.signature == sig(3, {1, 0, 0, 0}));

    Witness c = chain_form(3, 5);
    CHECK(c.order == 4);
    CHECK(c.signature.q == 4);
    CHECK(c.form.terms.size() == 5);  // head + pure powers of x_1..x_4
}

TEST_CASE("loop_form") {
    Witness w = loop_form(3, 4, 5, 61);
    CHECK(w.family == WitnessFamily::klein);  // full loop
    CHECK(w.loop_length == 5);
    CHECK(w.order == 61);

    Witness partial = loop_form(3, 3, 4, 5);  // (-2)^4 = 16 = 1 mod 5
    CHECK(partial.family == WitnessFamily::loop);
    CHECK(partial.form.terms.size() == 5);  // 4 loop terms + x_4^3
    CHECK(partial.signature == sig(5, {1, 3, 4, 2, 0}));

    // failed congruence names the failure
    try {
        loop_form(3, 3, 3, 5);
        FAIL("expected domain_error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("congruence") != std::string::npos);
    }
    CHECK_THROWS_AS(loop_form(3, 3, 9, 5), std::domain_error);  // l > n+2
}

TEST_CASE("witness_for_prime dispatch") {
    ProblemInstance i23 = ProblemInstance::make(2, 3);
    Witness w5 = witness_for_prime(i23, 5);
    CHECK(w5.loop_length == 4);  // ord_5(-2); the full loop, i.e. Klein
    CHECK(w5.family == WitnessFamily::klein);

    Witness w7 = witness_for_prime(ProblemInstance::make(5, 3), 7);
    CHECK(w7.family == WitnessFamily::loop);  // ord_7(-2) = 6 < n+2 = 7
    CHECK(w7.loop_length == 6);

    Witness w2 = witness_for_prime(i23, 2);
    CHECK(w2.family == WitnessFamily::chain);
    CHECK(w2.order == 2);
    CHECK(w2.signature.q == 2);

    Witness w11 = witness_for_prime(ProblemInstance::make(3, 3), 11);
    CHECK(w11.family == WitnessFamily::klein);
    CHECK(w11.loop_length == 5);

    Witness wf = witness_for_prime(ProblemInstance::make(2, 4), 2);
    CHECK(wf.family == WitnessFamily::fermat);
    CHECK(wf.order == 2);

    CHECK_THROWS_AS(witness_for_prime(ProblemInstance::make(3, 4), 13), std::domain_error);
}

TEST_CASE("is_smooth_standard") {
    CHECK(is_smooth_standard(klein_form(3, 3, 11)));
    CHECK(is_smooth_standard(fermat_form(4, 5)));
    CHECK(is_smooth_standard(chain_form(3, 4)));

    // Quadric parity: Klein quadric singular exactly when n = 2 mod 4.
    CHECK_FALSE(is_smooth_standard(klein_form(6, 2, 2)));
    CHECK(is_smooth_standard(klein_form(4, 2, 2)));
    CHECK(is_smooth_standard(klein_form(5, 2, 2)));
    CHECK_FALSE(is_smooth_standard(klein_form(2, 2, 2)));
}

TEST_CASE("normalize_signature") {
    Signature s = sig(11, {2, 7, 8, 6, 10});
    CHECK(normalize_signature(s) == sig(11, {1, 9, 4, 3, 5}));
    CHECK(normalize_signature(normalize_signature(s)) == normalize_signature(s));
    CHECK(normalize_signature(sig(11, {1, 9, 4, 3, 5})) == sig(11, {1, 9, 4, 3, 5}));
    CHECK(normalize_signature(sig(7, {0, 0, 3, 0})) == sig(7, {0, 0, 1, 0}));
    CHECK_THROWS_AS(normalize_signature(sig(7, {0, 0, 0})), std::domain_error);
    CHECK_THROWS_AS(normalize_signature(sig(6, {1, 2})), std::domain_error);  // composite q
}

TEST_CASE("invariant_monomials finds the Klein eigenspace") {
    ProblemInstance inst = ProblemInstance::make(3, 3);
    Witness w = klein_form(3, 3, 11);
    auto ms = invariant_monomials(inst, w.signature, 0);
    // Exactly the five cyclic monomials x_i^2 x_{i+1}.
    std::set<Monomial, GrlexDesc> expected;
    for (int i = 0; i < 5; ++i) {
        Monomial m{std::vector<unsigned>(5, 0)};
        m.exponents[i] = 2;
        m.exponents[(i + 1) % 5] = 1;
        expected.insert(m);
    }
    REQUIRE(ms.size() == 5);
    for (const Monomial& m : ms) CHECK(expected.count(m));

    // Oracle: brute force over all 35 cubic monomials in 5 variables.
    CHECK(monomials_of_degree(5, 3).size() == 35);
    size_t hits = 0;
    for (const Monomial& m : monomials_of_degree(5, 3))
        if (weight(m, w.signature) == 0) ++hits;
    CHECK(hits == 5);

    // All-zero signature keeps everything.
    Signature zero{11, std::vector<Integer>(5, 0)};
    CHECK(invariant_monomials(inst, zero, 0).size() == 35);

    // (2,3) Klein: the four cyclic monomials out of 20.
    Witness w23 = klein_form(2, 3, 5);
    CHECK(invariant_monomials(ProblemInstance::make(2, 3), w23.signature, 0).size() == 4);
}

TEST_CASE("monomials_of_degree is descending graded-lex and complete") {
    auto ms = monomials_of_degree(3, 4);
    CHECK(ms.size() == 15);
    for (size_t i = 0; i + 1 < ms.size(); ++i) CHECK(grlex_greater(ms[i], ms[i + 1]));
    CHECK(ms.front() == mon({4, 0, 0}));
    CHECK(ms.back() == mon({0, 0, 4}));
    CHECK(monomials_of_degree(4, 0).size() == 1);
    CHECK_THROWS_AS(monomials_of_degree(8, 40), resource_error);
}

TEST_CASE("projective_order matches the min-over-shifts definition") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        long long q = rng() % 40 + 2;
        size_t len = rng() % 5 + 2;
        Signature s{Integer(q), {}};
        for (size_t i = 0; i < len; ++i) s.sigma.emplace_back(rng() % q);
        CHECK(projective_order(s) == brute_force_projective_order(s));
    }
    // scalars act trivially
    CHECK(projective_order(sig(9, {4, 4, 4})) == 1);
    CHECK(projective_order(sig(5, {1, 0, 0, 0})) == 5);
}

TEST_CASE("witness invariants over the grid") {
    for (int n = 2; n <= 5; ++n) {
        for (int d = 3; d <= 5; ++d) {
            ProblemInstance inst = ProblemInstance::make(n, d);
            for (const Integer& p : admissible_primes(inst)) {
                Witness w = witness_for_prime(inst, p);
                CHECK(is_invariant(w.form, w.signature));
                CHECK(min_variable_degree(w.form).second >= d - 1);
                CHECK(is_smooth_standard(w));
                CHECK(w.order == p);
                CHECK(projective_order(w.signature) == p);
            }
        }
    }
}

TEST_CASE("base-(1-d) digit uniqueness (Lemma li)") {
    // Over all digit vectors a_i in {0..d-2}^(n+2), only the zero vector
    // evaluates to zero at 1-d.
    for (int d = 3; d <= 5; ++d) {
        for (int len = 3; len <= 6; ++len) {
            std::vector<int> a(len, 0);
            size_t zero_hits = 0, total = 0;
            while (true) {
                Integer sum = 0, pw = 1;
                for (int i = 0; i < len; ++i) {
                    sum += a[i] * pw;
                    pw *= Integer(1) - d;
                }
                ++total;
                if (sum == 0) {
                    ++zero_hits;
                    for (int v : a) CHECK(v == 0);
                }
                int i = 0;
                while (i < len && a[i] == d - 2) a[i++] = 0;
                if (i == len) break;
                ++a[i];
            }
            CHECK(zero_hits == 1);
            CHECK(total == static_cast<size_t>(std::pow(d - 1, len)));
        }
    }
}

TEST_CASE("normalization preserves the weight-zero monomial set") {
    ProblemInstance inst = ProblemInstance::make(3, 3);
    Signature s = sig(11, {2, 7, 8, 6, 10});
    auto before = invariant_monomials(inst, s, 0);
    auto after = invariant_monomials(inst, normalize_signature(s), 0);
    CHECK(before == after);
}

TEST_CASE("text serialization round-trips") {
    Witness w = klein_form(3, 4, 61);
    Form f = w.form;
    CHECK(form_from_text(form_to_text(f)) == f);

    Form g{2, 5, {}};
    g.add_term(mon({5, 0, 0, 0}), -3);
    g.add_term(mon({2, 2, 1, 0}), Integer("123456789012345678901234567890"));
    CHECK(form_from_text(form_to_text(g)) == g);

    CHECK_THROWS_AS(form_from_text("garbage"), std::domain_error);
}

TEST_CASE("json serialization round-trips") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
        int n = static_cast<int>(rng() % 3) + 1;
        int d = static_cast<int>(rng() % 4) + 2;
        Form f{n, d, {}};
        auto all = monomials_of_degree(n + 2, d);
        for (int t = 0; t < 5; ++t) {
            long long c = static_cast<long long>(rng() % 2001) - 1000;
            f.add_term(all[rng() % all.size()], c);
        }
        CHECK(form_from_json(to_json(f)) == f);
        CHECK(form_from_text(form_to_text(f)) == f);
    }
}
