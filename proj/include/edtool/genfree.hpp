#pragma once

// Certificate engine for generic freeness of N_G(T)-representations: exact
// torus criteria via lattice spans, faithfulness of the Weyl action on the
// kernel of the weight-summation map (swept exhaustively or refuted through
// normal-subgroup witnesses), and the cycle-type inequality certificate for
// the projective row-space action of monomial matrices.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edtool/intlat.hpp"
#include "edtool/reps.hpp"
#include "edtool/rootsys.hpp"
#include "edtool/weyl.hpp"

namespace edt::genfree {

enum class Verdict { Pass, Fail, NotApplicable };
enum class Strategy { Auto, Exhaustive, MinimalNormalWitnesses, MonteCarlo };

std::string to_string(Verdict v);
std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& s);

struct Witness {
    std::string kind;    // "weyl-element" | "zero-sum-tuple" | "torus-kernel"
    std::string detail;
    std::vector<std::vector<int>> vectors;           // weight tuples, matrix rows
    std::optional<weyl::WeylElement> element;
};

struct Certificate {
    std::string id;              // stable reference, e.g. "short:F4"
    std::string target;          // group + representation description
    bool projective = false;
    Verdict verdict = Verdict::NotApplicable;
    std::string strategy;        // strategy that actually ran
    std::vector<Witness> witnesses;
    std::size_t kernel_rank = 0;
    bool torus_faithful = false;
    std::optional<intlat::Int> torus_kernel_order;   // finite kernel order when not faithful
    std::optional<long> bound;   // ed upper bound emitted on pass
    mpz_class checked_elements = 0;
    std::uint64_t seed = 0;
    unsigned trials = 0;
    std::vector<std::string> provenance;
};

struct TorusVerdict {
    bool generically_free = false;
    std::optional<intlat::Int> kernel_order;  // empty = positive-dimensional kernel
};

/// Diagonalizable-group criterion: the torus acts generically freely on V
/// iff the weights span T^*, and on P(V) iff the pairwise differences span.
/// Reports the finite kernel order otherwise.
TorusVerdict torus_generically_free(const reps::WeightMultiset& weights, bool projective);

/// Saturated kernel basis of psi: Z^Omega -> T^*, (n_w) -> sum n_w * w.
/// Refuses weight multisets with repeated weights (multiplicity condition).
std::vector<intlat::Vec> psi_kernel(const reps::WeightMultiset& weights);

/// True iff w fixes ker(psi) pointwise: every kernel basis vector is constant
/// on every cycle of the permutation w induces on the weights.  Fast path:
/// reject as soon as the cycle deficit exceeds rank(psi).  Throws
/// std::domain_error when w does not stabilize the weight multiset.
bool acts_trivially_on_kernel(const rootsys::RootSystem& rs, const weyl::WeylElement& w,
                              const reps::WeightMultiset& weights,
                              const std::vector<intlat::Vec>& kernel);

/// -1 acts nontrivially on ker(psi).  Requires a negation-closed weight set
/// without zero; when |P| > dim T for a half-set P the counting criterion
/// already forces the answer and the direct cycle test must agree.
bool minus_one_moves_kernel(const rootsys::RootSystem& rs, const reps::WeightMultiset& weights);

struct SweepOptions {
    std::uint64_t limit = 0;     // 0 = EDTOOL_ENUM_LIMIT / built-in default
    unsigned mc_trials = 20;
    std::uint64_t seed = 1;
};

/// The hard-coded minimal-normal witness material for a Weyl group: for each
/// named subgroup, elements whose nontrivial action on ker(psi) rules it out
/// as a kernel.  Exposed so tests can machine-check normality and
/// nontriviality of every listed subgroup.
struct NormalWitnessSet {
    std::string name;
    std::string fact;
    std::vector<weyl::WeylElement> elements;
};
std::vector<NormalWitnessSet> minimal_normal_witnesses(const rootsys::RootSystem& rs);

/// Does the full component group W act faithfully on ker(psi)?
///  - Exhaustive: stream every Weyl element through the cycle test.
///  - MinimalNormalWitnesses: check -1, the full/even sign-flip vectors, or
///    alternating/derived-subgroup elements, per family; any nontrivial
///    element found acting trivially is a concrete failure witness.
///  - MonteCarlo: seeded random normal closures certified to contain -1.
Certificate faithful_kernel_action(const rootsys::RootSystem& rs,
                                   const reps::WeightMultiset& weights, Strategy strategy,
                                   const SweepOptions& opts = {});

/// Short-root module certificate (projective): torus faithfulness on P(V̄)
/// plus kernel faithfulness; emits ed(N_G(T)) <= |Omega| - dim T - 1 on pass.
/// A1 is admitted and fails with the reflection as witness.
Certificate certify_short(const rootsys::RootSystem& rs, Strategy strategy = Strategy::Auto,
                          const SweepOptions& opts = {});

/// Zero-sum subset of `size` weights with no +-pairs (backtracking search).
std::optional<std::vector<std::size_t>> find_zero_sum_subset(const reps::WeightMultiset& weights,
                                                             std::size_t size);

/// Minuscule certificate (linear) for E6 (omega_1/omega_6) and E7 (omega_7);
/// emits ed(N_G(T)) <= |Omega| - dim T on pass.
Certificate certify_minuscule(const rootsys::RootSystem& rs, unsigned fundamental_index,
                              Strategy strategy = Strategy::Auto, const SweepOptions& opts = {});

/// Half-spin certificate (linear) for HSpin_n, n = 12, 16, 20, ...;
/// exhaustive is feasible through n = 16.
Certificate certify_half_spin(unsigned n, Strategy strategy = Strategy::Auto,
                              const SweepOptions& opts = {});

/// Cycle-type certificate for the projective row-space action: for every
/// nontrivial cycle type of S_n, n - c < (m - c_m)(n - 2), where c counts all
/// cycles, m the moved points and c_m the cycles among them.
struct ProjsRow {
    std::vector<unsigned> cycle_type;  // partition of n, descending
    long lhs = 0;                      // n - c   (dim of the torus conjugacy class)
    long rhs = 0;                      // (m - c_m)(n - 2)  (codim of the fixed locus)
    bool holds = false;
};
struct ProjsReport {
    unsigned n = 0;
    std::vector<ProjsRow> rows;
    bool all_hold = false;
};
ProjsReport verify_projs_inequality(unsigned n);
/// The report wrapped as a Certificate with strategy "inequality".
Certificate certify_projs(unsigned n);

}  // namespace edt::genfree
