#pragma once

// Weight multisets and dimension formulas for the representations the
// certificates consume: short-root modules, minuscule orbits, half-spin
// lattices, and the C_n second-fundamental-weight dimensions.

#include <string>
#include <vector>

#include "edtool/intlat.hpp"
#include "edtool/rootsys.hpp"

namespace edt::reps {

/// A character lattice T^* with Q ⊆ T^* ⊆ P, described by a basis inside the
/// abstract weight lattice P (rows of basis_in_weight_coords).
struct CharacterLattice {
    unsigned rank = 0;
    intlat::IntegerMatrix basis_in_weight_coords;
    std::string label;  // "adjoint" | "simply-connected" | "half-spin"

    /// Index [P : T^*].
    intlat::Int index_in_weight_lattice() const;
    /// Expresses a weight-coordinate vector in this lattice's basis; throws
    /// std::domain_error when the vector is not in the lattice.
    std::vector<int> coords_of(const std::vector<int>& weight_coords) const;
};

CharacterLattice adjoint_lattice(const rootsys::RootSystem& rs);
CharacterLattice simply_connected_lattice(const rootsys::RootSystem& rs);

/// The character lattice of HSpin_n: the index-2 sublattice of P(D_{n/2})
/// generated by the root lattice and the half-spin weight.  Requires
/// n ≡ 0 mod 4 and n >= 12 (RefusalError otherwise).
CharacterLattice half_spin_lattice(unsigned n);

/// Nonzero weights of a representation restricted to T, with multiplicities,
/// stored both in the declared T^*-basis and in weight coordinates.
struct WeightMultiset {
    rootsys::DynkinType type{rootsys::Family::A, 1};
    CharacterLattice lattice;
    std::vector<std::vector<int>> weights;            // T^*-coordinates
    std::vector<std::vector<int>> weights_in_p;       // weight coordinates
    std::vector<unsigned> multiplicities;

    std::size_t size() const { return weights.size(); }
    bool multiplicity_free() const;
    bool closed_under_negation() const;
};

/// Weights = the short roots, each with multiplicity 1, in the adjoint
/// lattice (the nonzero weights of the Weyl module with highest weight the
/// highest short root).
WeightMultiset short_root_module(const rootsys::RootSystem& rs);

/// The W-orbit of a minuscule fundamental weight in the simply connected
/// lattice.  Admissible: (E6, 1 or 6), (E7, 7), (D_n, n-1 or n).  Other
/// requests are refused.
WeightMultiset minuscule_module(const rootsys::RootSystem& rs, unsigned fundamental_index);

/// Half-spin weights of D_{n/2} in the HSpin character lattice.
WeightMultiset half_spin_module(const rootsys::RootSystem& rs, unsigned n);

/// dim L(omega_2) for Sp_2n in characteristic p: 2n^2-n-1 when p does not
/// divide n, 2n^2-n-2 when it does.
unsigned long c_lambda2_dim(unsigned n, unsigned p);

/// Dimension of a faithful representation of Spin_n: the spin representation
/// (n odd) or vector plus half-spin (n even).  Requires n >= 7.
unsigned long spin_faithful_dim(unsigned n);

}  // namespace edt::reps
