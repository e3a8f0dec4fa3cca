#pragma once

// Root systems of types A-G in exact simple-root coordinates (Bourbaki
// conventions), with short/long classification, Cartan pairings and the
// eps-coordinate embedding for the classical families.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "edtool/intlat.hpp"

namespace edt::rootsys {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct DynkinType {
    Family family;
    unsigned rank;

    /// Admissible ranks: A>=1, B>=2, C>=2, D>=3, E in {6,7,8}, F=4, G=2.
    bool admissible() const;
    std::string label() const;  // "E8", "B3", ...
    /// Parses labels like "E8", "A1", "D10".  Throws std::domain_error.
    static DynkinType parse(const std::string& s);

    friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

/// Number of roots of the type, by the classification (closed form).
std::size_t root_count_of(const DynkinType& t);
/// Number of short roots (= all roots for the simply-laced types).
std::size_t short_root_count_of(const DynkinType& t);

/// Root vectors in simple-root coordinates.  Coefficients are tiny (at most
/// 6 in E8), so plain int is exact.
using RootVec = std::vector<int>;

class RootSystem {
public:
    /// Builds the root system.  C2 is normalized to B2 (isomorphic systems);
    /// the requested label is kept for display.  Throws std::domain_error on
    /// inadmissible types.
    static RootSystem build(DynkinType type);
    static RootSystem build(Family family, unsigned rank) { return build({family, rank}); }

    const DynkinType& type() const { return type_; }
    /// Label as requested by the caller (i.e. "C2" even though the system is
    /// stored as B2).
    const std::string& requested_label() const { return requested_label_; }
    unsigned rank() const { return type_.rank; }

    /// All roots; the simple roots occupy indices 0..rank-1.
    const std::vector<RootVec>& roots() const { return roots_; }
    std::size_t root_count() const { return roots_.size(); }
    RootVec simple_root(unsigned bourbaki_index) const;  // 1-based

    /// Cartan integer c[i][j] = <alpha_i, alpha_j^vee>, 1-based indices.
    int cartan(unsigned i, unsigned j) const;
    intlat::IntegerMatrix cartan_matrix() const;

    /// Index of a root in roots(), or -1 when the vector is not a root.
    int root_index(const RootVec& v) const;
    bool is_root(const RootVec& v) const { return root_index(v) >= 0; }

    /// Scaled squared length; the scale is fixed per system, so comparisons
    /// and the short/long split are exact.
    long length2(const RootVec& v) const;
    bool is_short(const RootVec& v) const { return length2(v) == short_len2_; }
    bool simply_laced() const { return simply_laced_; }

    /// The W-orbit of shorter length; every root for simply-laced types.
    std::vector<RootVec> short_roots() const;
    std::vector<int> short_root_indices() const;

    /// Cartan pairing <beta, alpha^vee> = 2(beta,alpha)/(alpha,alpha) for a
    /// root alpha.  Throws std::domain_error when alpha = 0.
    int pairing(const RootVec& beta, const RootVec& alpha) const;

    /// s_i acting on root-lattice coordinates, 1-based i.
    RootVec reflect(unsigned bourbaki_index, const RootVec& v) const;
    /// s_i acting on weight coordinates (coefficients on the fundamental
    /// weights): s_i(v)_j = v_j - v_i * c[i][j].
    std::vector<int> reflect_weight(unsigned bourbaki_index, const std::vector<int>& v) const;
    /// Root-lattice vector expressed in weight coordinates (row of products
    /// with the Cartan matrix).
    std::vector<int> to_weight_coords(const RootVec& v) const;

    /// Scaled half square lengths (alpha_i, alpha_i)/2 of the simple roots.
    const std::vector<long>& simple_half_lengths() const { return half_lengths_; }
    /// Pairing <v, beta^vee> for v in weight coordinates and a root beta in
    /// root-lattice coordinates.
    int weight_pairing(const std::vector<int>& weight_coords, const RootVec& beta) const;

    /// Reduced word (1-based reflection indices) for the longest element.
    const std::vector<unsigned>& longest_element_word() const { return longest_word_; }
    /// True iff -identity belongs to the Weyl group, i.e. the longest
    /// element acts as -1 on the root lattice.
    bool has_minus_one() const { return has_minus_one_; }

    /// Two non-orthogonal short simple roots chi1, chi2 together with
    /// chi3 = -chi1-chi2; all three are short roots summing to zero.
    /// Throws std::domain_error when no such pair exists (rank 1, B_n, G2).
    std::array<RootVec, 3> short_witness_triple() const;

    /// eps-coordinate embedding for the classical families: the matrix whose
    /// column i holds simple root alpha_{i+1} in eps coordinates (A_n sits in
    /// Z^{n+1}, B/C/D in Z^n).  Empty for exceptional types.
    const std::vector<std::vector<int>>& ambient_columns() const { return ambient_; }
    /// Root-lattice vector converted to eps coordinates (classical only).
    std::vector<int> to_ambient(const RootVec& v) const;

private:
    DynkinType type_{Family::A, 0};
    std::string requested_label_;
    std::vector<RootVec> roots_;
    std::map<RootVec, int> index_;
    std::vector<int> cartan_;        // rank*rank
    std::vector<long> gram_;         // rank*rank, scaled symmetric form
    std::vector<long> half_lengths_;
    long short_len2_ = 0;
    bool simply_laced_ = true;
    bool has_minus_one_ = false;
    std::vector<unsigned> longest_word_;
    std::vector<std::vector<int>> ambient_;
};

}  // namespace edt::rootsys
