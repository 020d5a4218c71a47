#include "hypaut/admissible.hpp"

#include <algorithm>
#include <set>

namespace hypaut {

namespace {

// Least l in [1, cap] with base^l == 1 mod q, or nullopt. Successive
// multiplication; cheap because cap is n+2.
std::optional<int> least_power_to_one(const Integer& base, const Integer& q, int cap) {
    Integer b = mod_canonical(base, q);
    if (gcd(b, q) != 1) return std::nullopt;
    Integer acc = b;
    for (int l = 1; l <= cap; ++l) {
        if (acc == 1) return l;
        acc = acc * b % q;
    }
    return std::nullopt;
}

}  // namespace

ProblemInstance ProblemInstance::make(int n, int d) {
    if (n < 1) throw std::domain_error("ProblemInstance: dimension n must be >= 1");
    if (d < 3) throw std::domain_error("ProblemInstance: degree d must be >= 3");
    Interpretation interp = (n >= 2 && !(n == 2 && d == 4))
                                ? Interpretation::full_automorphism_group
                                : Interpretation::linear_automorphisms_only;
    return ProblemInstance{n, d, interp};
}

AdmissibilityVerdict is_admissible_prime(const ProblemInstance& inst, const Integer& p) {
    if (!is_prime(p).prime)
        throw std::domain_error("is_admissible_prime: " + p.str() + " is not prime");
    AdmissibilityVerdict v{p, Verdict::not_realizable, Reason::no_l_exists, std::nullopt,
                           inst.interpretation};
    if (Integer(inst.d - 1) % p == 0) {
        v.verdict = Verdict::realizable;
        v.reason = Reason::divides_d_minus_1;
        return v;  // 1-d == 0 mod p: no multiplicative order to report
    }
    auto ell = least_power_to_one(inst.one_minus_d(), p, inst.n + 2);
    if (Integer(inst.d) % p == 0) {
        // Fermat witness case; 1-d == 1 mod p so the minimal exponent is 1.
        v.verdict = Verdict::realizable;
        v.reason = Reason::divides_d;
        v.ell = ell;
        return v;
    }
    if (ell) {
        v.verdict = Verdict::realizable;
        v.reason = Reason::order_criterion;
        v.ell = ell;
    }
    return v;
}

AdmissibilityVerdict is_realizable_order(const ProblemInstance& inst, const Integer& q) {
    if (q < 2) throw std::domain_error("is_realizable_order: q must be >= 2");
    if (is_prime(q).prime) return is_admissible_prime(inst, q);

    bool coprime_d = gcd(q, Integer(inst.d)) == 1;
    bool coprime_d1 = gcd(q, Integer(inst.d - 1)) == 1;
    AdmissibilityVerdict v{q, Verdict::outside_theorem_scope, Reason::no_l_exists, std::nullopt,
                           inst.interpretation};
    if (!coprime_d || !coprime_d1) {
        v.reason = !coprime_d ? Reason::divides_d : Reason::divides_d_minus_1;
        return v;
    }
    auto ell = least_power_to_one(inst.one_minus_d(), q, inst.n + 2);
    if (ell) {
        v.verdict = Verdict::realizable;
        v.reason = Reason::order_criterion;
        v.ell = ell;
    } else {
        v.verdict = Verdict::not_realizable;
        v.reason = Reason::no_l_exists;
    }
    return v;
}

std::vector<Integer> admissible_primes(const ProblemInstance& inst) {
    std::set<Integer> primes;
    for (const Integer& p : factorize(Integer(inst.d - 1)).primes()) primes.insert(p);
    const Integer base = inst.one_minus_d();
    Integer power = 1;
    for (int l = 1; l <= inst.n + 2; ++l) {
        power *= base;
        for (const Integer& p : factorize(power - 1).primes()) primes.insert(p);
    }
    return {primes.begin(), primes.end()};
}

std::vector<Integer> admissible_primes_sieve(const ProblemInstance& inst, std::uint64_t limit) {
    std::vector<Integer> out;
    for (std::uint64_t p : primes_in_range(2, limit)) {
        Integer pp(p);
        if (Integer(inst.d - 1) % pp == 0 || Integer(inst.d) % pp == 0 ||
            least_power_to_one(inst.one_minus_d(), pp, inst.n + 2))
            out.push_back(pp);
    }
    return out;
}

Integer max_admissible_prime(const ProblemInstance& inst) {
    auto primes = admissible_primes(inst);
    return primes.back();  // nonempty: d-1 >= 2 always contributes a prime
}

ExtremalReport extremal_report(const ProblemInstance& inst) {
    ExtremalReport r{};
    r.n_is_2 = inst.n == 2;
    r.n_plus_2_prime = is_prime(Integer(inst.n + 2)).prime;
    r.phi_value = eval_int(cyclotomic_poly(static_cast<unsigned>(inst.n + 2)), inst.one_minus_d());
    r.phi_primality = is_prime(r.phi_value);
    r.exists = (r.n_is_2 || r.n_plus_2_prime) && r.phi_primality.prime;
    if (r.exists) {
        r.p = r.phi_value;
        r.repunit_note = inst.n != 2;
        if (r.repunit_note) {
            Integer base = inst.one_minus_d();
            Integer repunit = (boost::multiprecision::pow(base, unsigned(inst.n + 2)) - 1) / (base - 1);
            if (repunit != r.phi_value)
                throw inconsistency_error("extremal_report: repunit identity failed");
        }
    }
    return r;
}

PrimeOrderBound prime_order_upper_bound(const ProblemInstance& inst) {
    PrimeOrderBound b;
    b.strict = boost::multiprecision::pow(Integer(inst.d - 1), unsigned(inst.n + 1));
    ExtremalReport r = extremal_report(inst);
    if (r.exists)
        b.sharp = r.phi_value;
    else
        b.non_extremal = boost::multiprecision::pow(Integer(inst.d - 1), unsigned(inst.n));
    return b;
}

std::optional<Integer> new_admissible_prime(const ProblemInstance& inst) {
    if (inst.n < 3) throw std::domain_error("new_admissible_prime: requires n >= 3");
    const int m = inst.n + 2;
    const Integer base = inst.one_minus_d();
    Integer value = boost::multiprecision::pow(base, unsigned(m)) - 1;
    for (const Integer& p : factorize(value).primes()) {
        // ord_p(1-d) divides m; it is exactly m iff no proper divisor works.
        bool full_order = true;
        for (int e = 1; e < m; ++e) {
            if (m % e != 0) continue;
            if (mod_pow(base, e, p) == 1) {
                full_order = false;
                break;
            }
        }
        if (full_order) return p;  // factors come sorted ascending
    }
    return std::nullopt;
}

GorinovBound gorinov_bound(const ProblemInstance& inst) {
    const int n = inst.n, d = inst.d;
    Rational b(1, n + 1);
    const Integer lcm_rhs = Integer(n + 2) * boost::multiprecision::pow(Integer(d - 1), unsigned(n));
    for (int i = 0; i <= n; ++i) {
        Integer binom = binomial(unsigned(n + 2), unsigned(i));
        Integer parity = ((n - i + 1) % 2 == 0) ? 1 : -1;
        Integer factor = parity + boost::multiprecision::pow(Integer(d - 1), unsigned(n - i + 2));
        Integer lcm_lhs = binom * boost::multiprecision::pow(Integer(d - 1), unsigned(i));
        b *= Rational(factor, binom);
        b *= lcm(lcm_lhs, lcm_rhs);
    }
    GorinovBound out;
    out.numerator = boost::multiprecision::numerator(b);
    out.denominator = boost::multiprecision::denominator(b);
    out.integral = out.denominator == 1;
    return out;
}

GorinovConjectureReport check_gorinov_conjecture(const ProblemInstance& inst) {
    GorinovConjectureReport report;
    report.bound = gorinov_bound(inst);
    if (!report.bound.integral)
        throw inconsistency_error("check_gorinov_conjecture: B is not integral for n=" +
                                  std::to_string(inst.n) + ", d=" + std::to_string(inst.d) +
                                  " (transcription defect in the B formula?)");
    report.all_realizable = true;
    const Integer base = inst.one_minus_d();
    for (const Integer& p : factorize(report.bound.numerator).primes()) {
        GorinovConjectureReport::Entry e{p, GorinovConjectureReport::Case::uncovered, std::nullopt,
                                         is_admissible_prime(inst, p)};
        for (int j = 2; j <= inst.n + 2; ++j) {
            if ((boost::multiprecision::pow(base, unsigned(j)) - 1) % p == 0) {
                e.covered_by = GorinovConjectureReport::Case::cyclotomic_factor;
                e.factor_exponent = j;
                break;
            }
        }
        if (e.covered_by == GorinovConjectureReport::Case::uncovered) {
            if (Integer(inst.d - 1) % p == 0)
                e.covered_by = GorinovConjectureReport::Case::divides_d_minus_1;
            else if (p <= inst.n + 2)
                e.covered_by = GorinovConjectureReport::Case::small_prime;
        }
        report.all_realizable = report.all_realizable && e.verdict.realizable();
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace hypaut
