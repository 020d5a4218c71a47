#pragma once

// Monomials, homogeneous forms, diagonal automorphisms and their signatures;
// the witness families (Fermat, chain, loop, Klein) with invariance and
// structural smoothness checks; invariant-monomial enumeration.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypaut/admissible.hpp"

namespace hypaut {

struct Monomial {
    std::vector<unsigned> exponents;  // index i -> power of x_i

    unsigned degree() const;
    bool operator==(const Monomial&) const = default;
};

// Graded lexicographic with x_0 greatest: higher total degree wins, then
// the first differing exponent (from x_0) decides. All deterministic
// orderings in the project use this.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

// Homogeneous form of degree d in n+2 variables; no zero coefficients are
// stored, terms iterate in descending graded-lex order.
struct Form {
    int n = 0;
    int d = 0;
    std::map<Monomial, Integer, GrlexDesc> terms;

    int variables() const { return n + 2; }
    void add_term(Monomial m, const Integer& coefficient);

    bool operator==(const Form&) const = default;
};

// Residue vector of a diagonal automorphism diag(xi^{sigma_0}, ...) of
// order q; entries canonical in [0, q).
struct Signature {
    Integer q;
    std::vector<Integer> sigma;

    bool operator==(const Signature&) const = default;
};

enum class WitnessFamily { fermat, chain, loop, klein };

struct Witness {
    Form form;
    Signature signature;
    Integer order;
    WitnessFamily family;
    int loop_length = 0;  // l for loop/klein (klein: n+2), 0 otherwise
};

// sum_i exponents[i]*sigma[i] mod q, canonical residue.
Integer weight(const Monomial& m, const Signature& s);

// True iff every monomial of f has weight 0 under s.
bool is_invariant(const Form& f, const Signature& s);

// The variable index minimizing deg_i(f) (max power of x_i over the terms),
// smallest index on ties, together with that degree. A smooth hypersurface
// needs deg_i >= d-1 for every i.
std::pair<int, int> min_variable_degree(const Form& f);

// Order of diag(sigma) in PGL: q / gcd(q, sigma_i - sigma_0 over all i).
Integer projective_order(const Signature& s);

// x_0^d + ... + x_{n+1}^d with sigma = (1,0,...,0) mod d.
Witness fermat_form(int n, int d);

// x_0^{d-1}x_1 + x_1^d + ... + x_{n+1}^d with sigma = (1,0,...,0) mod d-1.
Witness chain_form(int n, int d);

// sum_{i=1}^{l-1} x_{i-1}^{d-1}x_i + x_{l-1}^{d-1}x_0 + sum_{i>=l} x_i^d
// with sigma = (1, 1-d, ..., (1-d)^{l-1}, 0, ..., 0) mod q.
// Requires 1 <= l <= n+2 and (1-d)^l == 1 mod q.
Witness loop_form(int n, int d, int ell, const Integer& q);

// The full loop (l = n+2); accepts d >= 2 (d = 2 exists only for the
// smoothness parity criterion). Requires (1-d)^{n+2} == 1 mod q.
Witness klein_form(int n, int d, const Integer& q);

// Just the cyclic polynomial x_0^{d-1}x_1 + ... + x_{n+1}^{d-1}x_0, without
// any signature attached.
Form klein_polynomial(int n, int d);

// Dispatch on the admissibility reason: p | d -> Fermat, p | d-1 -> chain,
// otherwise the loop of length ord_p(1-d). Requires p admissible.
Witness witness_for_prime(const ProblemInstance& inst, const Integer& p);

// Structural smoothness of the four recognized families (general smoothness
// of arbitrary forms is out of scope). For d >= 3 all families are smooth;
// for d = 2 the loop block is smooth iff its length is not 0 mod 4.
bool is_smooth_standard(const Witness& w);

// Scales so the first nonzero entry becomes 1 (q prime).
Signature normalize_signature(const Signature& s);

// All degree-d monomials in n+2 variables whose weight under s equals
// target_weight, in descending graded-lex order.
std::vector<Monomial> invariant_monomials(const ProblemInstance& inst, const Signature& s,
                                          const Integer& target_weight);

// All degree-deg monomials in nvars variables, descending graded-lex.
std::vector<Monomial> monomials_of_degree(int nvars, int deg);

inline constexpr std::uint64_t kMaxMonomialCount = 2'000'000;

// Plain-text serialization: one term per line,
//   coeff x0^a0 x1^a1 ... x{n+1}^a{n+1}
// round-trips exactly.
std::string form_to_text(const Form& f);
Form form_from_text(const std::string& text);

std::string monomial_to_string(const Monomial& m);

}  // namespace hypaut
