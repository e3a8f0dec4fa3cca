#pragma once

// Weyl group engine: elements as root permutations (the lattice matrix is
// recovered from the images of the simple roots), BFS enumeration for small
// groups, deterministic Schreier-Sims stabilizer chains for everything else,
// and the kernel of the reduction ⟨W,-1⟩ -> GL(Q ⊗ F_p).

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "edtool/errors.hpp"
#include "edtool/intlat.hpp"
#include "edtool/rootsys.hpp"

namespace edt::weyl {

using Perm = std::vector<std::uint16_t>;

Perm identity_perm(std::size_t degree);
bool is_identity(const Perm& p);
/// (p*q)(x) = p(q(x))
Perm compose(const Perm& p, const Perm& q);
Perm inverse(const Perm& p);

/// An automorphism of the root lattice permuting the root set: a Weyl group
/// element or, in the extended group, -1 times one.
class WeylElement {
public:
    WeylElement() = default;
    WeylElement(Perm root_perm, std::vector<unsigned> word = {})
        : perm_(std::move(root_perm)), word_(std::move(word)) {}

    const Perm& root_perm() const { return perm_; }
    /// Simple-reflection word when known; empty otherwise.
    const std::vector<unsigned>& word() const { return word_; }
    bool is_identity_element() const { return is_identity(perm_); }

    /// Action matrix on the root lattice: column i is the image of alpha_{i+1}.
    intlat::IntegerMatrix matrix(const rootsys::RootSystem& rs) const;
    /// Image of a root-lattice vector.
    rootsys::RootVec apply_to_root_coords(const rootsys::RootSystem& rs,
                                          const rootsys::RootVec& v) const;
    /// Image of a weight-coordinate vector (uses the coroot pairing, exact).
    std::vector<int> apply_to_weight_coords(const rootsys::RootSystem& rs,
                                            const std::vector<int>& v) const;

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm_ == b.perm_; }

private:
    Perm perm_;
    std::vector<unsigned> word_;
};

/// Simple reflection s_i as a root permutation, 1-based Bourbaki index.
WeylElement simple_reflection(const rootsys::RootSystem& rs, unsigned bourbaki_index);
/// -identity as a root permutation (negation; always permutes the root set,
/// whether or not it lies in W).
WeylElement minus_identity(const rootsys::RootSystem& rs);
WeylElement compose(const rootsys::RootSystem& rs, const WeylElement& a, const WeylElement& b);
/// Element from a reduced (or any) word in the simple reflections.
WeylElement from_word(const rootsys::RootSystem& rs, const std::vector<unsigned>& word);

/// Deterministic Schreier-Sims stabilizer chain for a permutation group.
/// `forced_base` points are installed as the first base points in order even
/// when redundant, so the pointwise stabilizer of that prefix is exactly the
/// suffix group of the chain.  `base_hints` are preferred when further base
/// points are needed.
class StabilizerChain {
public:
    StabilizerChain(std::vector<Perm> generators, std::size_t degree,
                    std::vector<std::uint32_t> forced_base = {},
                    std::vector<std::uint32_t> base_hints = {});

    std::size_t degree() const { return degree_; }
    const mpz_class& order() const { return order_; }
    bool contains(const Perm& p) const;
    std::size_t base_size() const { return levels_.size(); }
    std::uint32_t base_point(std::size_t level) const { return levels_[level].base; }

    /// Order of the subgroup fixing base points [0, level) pointwise.
    mpz_class suffix_order(std::size_t level) const;
    /// Strong generators fixing base points [0, level) pointwise.
    std::vector<Perm> level_generators(std::size_t level) const;

    /// Streams every group element exactly once, in a deterministic order.
    /// The callback returns false to stop early; the function returns the
    /// number of elements visited.
    std::uint64_t for_each_element(const std::function<bool(const Perm&)>& visit) const;

    /// Uniformly random element (product of random transversal representatives).
    Perm random_element(std::mt19937_64& rng) const;

private:
    struct Level {
        std::uint32_t base = 0;
        std::vector<Perm> gens;              // strong generators at this level
        std::vector<std::uint32_t> orbit;    // BFS order, orbit[0] == base
        std::vector<std::int32_t> where;     // point -> index into orbit, -1 outside
        std::vector<Perm> transversal;       // transversal[i] maps base -> orbit[i]
    };

    void rebuild_orbit(std::size_t level);
    // Strips p through levels [from, end); returns the residue and the level
    // where it sticks (== base_size() when it fixes every base point).
    std::pair<Perm, std::size_t> strip(Perm p, std::size_t from) const;
    std::uint32_t pick_base_point(const Perm& moved_by);
    void complete_level(std::size_t level);

    std::size_t degree_ = 0;
    std::vector<Level> levels_;
    std::vector<std::uint32_t> hints_;
    std::size_t hint_cursor_ = 0;
    mpz_class order_ = 1;
};

/// Chain for the Weyl group acting on the root indices.
StabilizerChain root_action_chain(const rootsys::RootSystem& rs);
/// Exact Weyl group order via a stabilizer chain.
mpz_class weyl_order(const rootsys::RootSystem& rs);

/// Default cap for exhaustive element lists; override with EDTOOL_ENUM_LIMIT.
std::uint64_t default_enum_limit();

/// Every Weyl group element exactly once via BFS over generator products,
/// deduplicated by root permutation.  Refuses (RefusalError) when the group
/// order exceeds `limit`, reporting the exact order.
std::vector<WeylElement> enumerate(const rootsys::RootSystem& rs, std::uint64_t limit);
std::vector<WeylElement> enumerate(const rootsys::RootSystem& rs);

/// Element count by the same BFS, without materializing the elements; stops
/// and throws RefusalError past `limit`.
std::uint64_t bfs_count(const rootsys::RootSystem& rs, std::uint64_t limit);

/// BFS closure of a weight-coordinate vector under the simple reflections.
std::set<std::vector<int>> orbit(const rootsys::RootSystem& rs, const std::vector<int>& weight_coords);

/// A subgroup of (the +-1 extension of) the Weyl group together with its
/// stabilizer-chain data.
struct GroupHandle {
    std::string description;
    std::vector<WeylElement> generators;
    std::shared_ptr<const StabilizerChain> chain;  // root-action chain of the subgroup
    mpz_class order = 1;
    bool elementary_abelian_2 = false;
};

mpz_class order(const GroupHandle& g);

/// Kernel of the reduction of ⟨W,-1⟩ (or W itself when include_minus_one is
/// false) acting on the root lattice mod p, computed as the pointwise
/// stabilizer of the simple-root images in a chain over the combined
/// (mod-p vectors ⊔ roots) domain.  Throws std::domain_error unless p is prime.
GroupHandle kernel_mod_p(const rootsys::RootSystem& rs, unsigned p, bool include_minus_one = true);

/// "trivial", "Z/2", "(Z/2)^k", or "order N" for reporting.
std::string abelian_2_structure(const GroupHandle& g);

/// The eps-coordinate sign flip given by `mask` (bit i flips eps_{i+1}) as a
/// lattice automorphism, for types B, C, D.  For type D the popcount must be
/// even, otherwise the flip lies outside the Weyl group (std::domain_error).
WeylElement sign_flip_element(const rootsys::RootSystem& rs, std::uint32_t mask);

/// Generators of the even-sign-flip subgroup (Z/2)^{n-1} for types B, C, D.
GroupHandle sign_flip_subgroup(const rootsys::RootSystem& rs);

/// Normal closure of `seed` in the group generated by `group_gens`, as a
/// chain over the same domain.
StabilizerChain normal_closure(const std::vector<Perm>& group_gens, const Perm& seed,
                               std::size_t degree);

}  // namespace edt::weyl
