#pragma once

// Decision procedures for orders of automorphisms of smooth hypersurfaces
// of dimension n and degree d: which primes p and integers q are realizable,
// full enumeration with a sieve cross-check, the sharp extremal bound via
// Phi_{n+2}(1-d), new-in-dimension (Zsigmondy) primes, and the Gorinov
// divisibility bound with its conjecture check.

#include <optional>
#include <vector>

#include "hypaut/arith.hpp"
#include "hypaut/cyclotomic.hpp"

namespace hypaut {

enum class Interpretation { full_automorphism_group, linear_automorphisms_only };

struct ProblemInstance {
    int n;  // dimension >= 1
    int d;  // degree >= 3
    Interpretation interpretation;

    // Validates n >= 1, d >= 3 and derives the interpretation: the full
    // automorphism group is linear exactly when n >= 2 and (n,d) != (2,4);
    // for n = 1 or (2,4) only linear automorphisms are classified.
    static ProblemInstance make(int n, int d);

    Integer one_minus_d() const { return Integer(1) - d; }
};

enum class Verdict { realizable, not_realizable, outside_theorem_scope };

// Why a verdict was reached. For outside_theorem_scope the reason names the
// failed coprimality: divides_d when gcd(q,d) != 1, divides_d_minus_1 when
// gcd(q,d-1) != 1.
enum class Reason { divides_d_minus_1, divides_d, order_criterion, no_l_exists };

struct AdmissibilityVerdict {
    Integer value;
    Verdict verdict;
    Reason reason;
    // Minimal l with (1-d)^l == 1 mod value, when the order is defined.
    std::optional<int> ell;
    Interpretation interpretation;

    bool realizable() const { return verdict == Verdict::realizable; }
};

struct ExtremalReport {
    bool exists;  // (n = 2 or n+2 prime) and Phi_{n+2}(1-d) prime
    Integer phi_value;               // Phi_{n+2}(1-d), always computed
    std::optional<Integer> p;        // the extremal prime, when exists
    bool n_is_2;
    bool n_plus_2_prime;
    PrimalityResult phi_primality;
    // p equals the base-(1-d) repunit ((1-d)^{n+2}-1)/((1-d)-1); set when
    // exists and n != 2.
    bool repunit_note;
};

struct PrimeOrderBound {
    Integer strict;                        // (d-1)^{n+1}, always
    std::optional<Integer> sharp;          // Phi_{n+2}(1-d) when extremal
    std::optional<Integer> non_extremal;   // (d-1)^n otherwise: p < this
};

struct GorinovBound {
    Integer numerator;    // lowest terms
    Integer denominator;  // > 0; 1 iff integral
    bool integral;
};

struct GorinovConjectureReport {
    // Which case of the divisibility argument covers the prime.
    enum class Case { cyclotomic_factor, divides_d_minus_1, small_prime, uncovered };
    struct Entry {
        Integer p;
        Case covered_by;
        std::optional<int> factor_exponent;  // j with p | (1-d)^j - 1, for cyclotomic_factor
        AdmissibilityVerdict verdict;
    };
    GorinovBound bound;
    std::vector<Entry> entries;
    bool all_realizable;
};

// Prop. res-prime: p realizable iff p | d-1 or ord_p(1-d) <= n+2 (p | d is
// the ord = 1 case). Requires p prime.
AdmissibilityVerdict is_admissible_prime(const ProblemInstance& inst, const Integer& p);

// General q >= 2: primes delegate to is_admissible_prime; composite q with
// gcd(q,d) = gcd(q,d-1) = 1 uses the order criterion; other composites are
// outside the theorem's scope and never guessed.
AdmissibilityVerdict is_realizable_order(const ProblemInstance& inst, const Integer& q);

// Exact set: prime divisors of d-1 together with prime divisors of
// (1-d)^l - 1 for l = 1..n+2, via factorize. Ascending, deduplicated.
std::vector<Integer> admissible_primes(const ProblemInstance& inst);

// Independent oracle: sieve p <= limit and apply the per-prime order check.
std::vector<Integer> admissible_primes_sieve(const ProblemInstance& inst, std::uint64_t limit);

Integer max_admissible_prime(const ProblemInstance& inst);

PrimeOrderBound prime_order_upper_bound(const ProblemInstance& inst);

ExtremalReport extremal_report(const ProblemInstance& inst);

// Smallest prime p | (1-d)^{n+2} - 1 with ord_p(1-d) exactly n+2, i.e.
// admissible in dimension n but in no smaller dimension. Requires n >= 3.
std::optional<Integer> new_admissible_prime(const ProblemInstance& inst);

GorinovBound gorinov_bound(const ProblemInstance& inst);

// Factorizes B and certifies every prime factor realizable, recording which
// case of the divisibility argument applies. Throws inconsistency_error when
// B is not integral.
GorinovConjectureReport check_gorinov_conjecture(const ProblemInstance& inst);

}  // namespace hypaut
