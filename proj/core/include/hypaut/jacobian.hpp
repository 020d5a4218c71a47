#pragma once

// Griffiths-residue computations on Klein hypersurfaces: graded pieces of
// the Jacobian ring by exact fraction-free elimination over the integers,
// Hodge numbers, automorphism spectra, CM types, Galois permutations and
// the component dimensions they cut out in Sing A_g, plus the cyclic
// quotient-singularity / Gorenstein analysis.

#include <string>

#include "hypaut/forms.hpp"

namespace hypaut {

struct GradedPieceReport {
    int l;
    long ambient_dim;   // dim S^l
    long ideal_rank;    // rank of J_F^l
    long quotient_dim;  // dim R_F^l = ambient_dim - ideal_rank
    std::vector<Monomial> basis;  // non-pivot monomials under graded-lex
};

// Column order knob: the quotient dimensions must not depend on it; tests
// recompute with the reversed order and compare.
enum class ColumnOrder { grlex_desc, grlex_asc };

inline constexpr long kMaxGradedColumns = 20'000;
inline constexpr long kMaxGradedRows = 200'000;

// The n+2 formal partial derivatives, exact integer coefficients.
std::vector<Form> jacobian_generators(const Form& f);

// Builds the matrix of m * dF/dx_i over the degree-l monomial basis and
// computes its rank by exact integer elimination.
GradedPieceReport graded_piece(const Form& f, int l, ColumnOrder order = ColumnOrder::grlex_desc);

// Rank of the given monomials modulo J_F^l: true iff their images in R_F^l
// are linearly independent.
bool independent_mod_jacobian(const Form& f, int l, const std::vector<Monomial>& monomials);

// Weight-graded refinement of graded_piece (F must be invariant under s, so
// J_F^l splits into weight blocks); maps each weight with nonzero quotient
// dimension to that dimension. Values sum to graded_piece(f,l).quotient_dim.
std::map<Integer, long> weighted_quotient_dims(const Form& f, const Signature& s, int l,
                                               ColumnOrder order = ColumnOrder::grlex_desc);

// ((d-1)^{n+2} + (-1)^n (d-1)) / d, always integral. For even n this counts
// primitive cohomology only (callers flag that).
Integer middle_cohomology_dim(const ProblemInstance& inst);

// dim R_F^{rd-n-2} of the Klein form: 0 for negative degrees and above the
// Artinian top degree (n+2)(d-2).
long hodge_piece_dim(const ProblemInstance& inst, int r);

// Multiset of tangent-space eigenvalue exponents mod p (all multiplicities
// one in the cases handled here).
struct CMType {
    Integer p;
    std::vector<Integer> exponents;  // sorted, in [1, p-1]
};

// True iff exponents and their negations mod p partition {1, ..., p-1}.
bool cm_check(const CMType& c);

inline constexpr std::uint64_t kMaxStabilizerModulus = 1'000'003;

// All a in (Z/p)^* with a*C = C as sets, ascending. Requires cm_check.
std::vector<Integer> stabilizer_subgroup(const CMType& c);

using Cycle = std::vector<Integer>;

// Disjoint cycles of e -> k*e mod p on C; each cycle starts at its smallest
// element, cycles sorted by smallest element. Requires k in the stabilizer.
std::vector<Cycle> galois_permutation(const CMType& c, const Integer& k);

// Each cycle of length c contributes one to every eigenvalue zeta^{j*m/c};
// cycle lengths must divide the permutation order m.
std::vector<long> permutation_eigen_multiplicities(const std::vector<Cycle>& cycles, int m);

// Dimension of the corresponding component of Sing A_g: sum of m_a*m_b over
// residue pairs a < b with a+b = 0 mod m, plus m_a(m_a+1)/2 whenever
// 2a = 0 mod m. (Reconstructed count, pinned by three known values.)
long fixed_component_dimension(const std::vector<long>& mults, int m);

// Weights of the cyclic quotient singularity at a fixed point of the Klein
// automorphism: ((1-d)^2 - 1, ..., (1-d)^{n+1} - 1) mod p.
struct SingularityType {
    Integer p;
    std::vector<Integer> weights;  // nonzero residues in [1, p-1]
};

SingularityType quotient_singularity_type(const ProblemInstance& inst, const Integer& p);

struct GorensteinResult {
    bool gorenstein;  // weights sum to 0 mod p
    Integer defect;   // the sum mod p
};

GorensteinResult is_gorenstein(const SingularityType& t);

// Closed form of the Gorenstein defect for extremal (n, d, p): d - n - 2
// mod p.
Integer extremal_gorenstein_defect(const ProblemInstance& inst, const Integer& p);

// The three (n, d) with n >= 2 whose intermediate Jacobian is a nontrivial
// principally polarized abelian variety: (3,3), (3,4), (5,3).
bool ppav_gate(const ProblemInstance& inst);

struct PpavReport {
    int n;
    int d;
    Integer p;
    long g;
    bool extremal;  // p == 2g + 1
    Signature klein_signature;
    int tangent_degree;         // graded degree of the computed piece
    std::string label_tangent;  // H^{k,k+1}, k = (n-1)/2
    std::string label_residue;  // H^{n+1-r,r-1} for the computed degree
    CMType spectrum;

    // Filled by ppav_full_report:
    std::vector<Integer> stabilizer;
    Integer stabilizer_element;
    int permutation_order = 0;
    std::vector<Cycle> cycles;
    std::vector<long> eigen_multiplicities;
    long component_dimension = 0;
};

// Spectrum part only (g, p, extremality, CM type).
PpavReport ppav_spectrum(const ProblemInstance& inst);

// Composes spectrum, stabilizer, permutation, multiplicities and component
// dimension. k defaults to the published generator for each gate case.
PpavReport ppav_full_report(const ProblemInstance& inst,
                            std::optional<Integer> k = std::nullopt);

}  // namespace hypaut
