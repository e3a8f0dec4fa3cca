#include "edtool/reps.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "edtool/errors.hpp"
#include "edtool/weyl.hpp"

namespace edt::reps {

using intlat::IntegerMatrix;
using intlat::Vec;

intlat::Int CharacterLattice::index_in_weight_lattice() const {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < basis_in_weight_coords.rows(); ++i)
        rows.push_back(basis_in_weight_coords.row(i));
    auto idx = intlat::cokernel_order(rows, rank);
    if (!idx) throw std::logic_error("character lattice basis is not full rank");
    return *idx;
}

std::vector<int> CharacterLattice::coords_of(const std::vector<int>& weight_coords) const {
    Vec v(weight_coords.begin(), weight_coords.end());
    auto x = intlat::solve_left_integral(basis_in_weight_coords, v);
    if (!x) throw std::domain_error("vector is not in the declared character lattice");
    std::vector<int> out(x->size());
    for (std::size_t i = 0; i < x->size(); ++i) {
        if (!(*x)[i].fits_sint_p()) throw std::logic_error("lattice coordinate overflow");
        out[i] = int((*x)[i].get_si());
    }
    return out;
}

CharacterLattice adjoint_lattice(const rootsys::RootSystem& rs) {
    CharacterLattice lat;
    lat.rank = rs.rank();
    lat.basis_in_weight_coords = rs.cartan_matrix();
    lat.label = "adjoint";
    return lat;
}

CharacterLattice simply_connected_lattice(const rootsys::RootSystem& rs) {
    CharacterLattice lat;
    lat.rank = rs.rank();
    lat.basis_in_weight_coords = IntegerMatrix::identity(rs.rank());
    lat.label = "simply-connected";
    return lat;
}

CharacterLattice half_spin_lattice(unsigned n) {
    if (n % 4 != 0 || n < 12)
        throw RefusalError("half-spin groups exist for n divisible by 4; bounds here need n >= 12 "
                           "(got n = " + std::to_string(n) + ")");
    const unsigned m = n / 2;
    auto rs = rootsys::RootSystem::build(rootsys::Family::D, m);

    // T^* = Q + Z*omega_m inside P, presented by the HNF of the stacked
    // generators.
    std::vector<Vec> gens;
    auto cartan = rs.cartan_matrix();
    for (unsigned i = 0; i < m; ++i) gens.push_back(cartan.row(i));
    Vec spin(m, 0);
    spin[m - 1] = 1;
    gens.push_back(spin);

    CharacterLattice lat;
    lat.rank = m;
    lat.basis_in_weight_coords = intlat::hnf_rows(IntegerMatrix::from_rows(gens));
    lat.label = "half-spin";
    if (lat.basis_in_weight_coords.rows() != m)
        throw std::logic_error("half-spin lattice is not full rank");
    if (lat.index_in_weight_lattice() != 2)
        throw std::logic_error("half-spin lattice does not have index 2 in P");
    // Q must still be contained (divisibility of the inclusion chain).
    for (unsigned i = 0; i < m; ++i) {
        std::vector<int> row(m);
        for (unsigned j = 0; j < m; ++j) row[j] = rs.cartan(i + 1, j + 1);
        lat.coords_of(row);
    }
    return lat;
}

bool WeightMultiset::multiplicity_free() const {
    for (unsigned m : multiplicities)
        if (m != 1) return false;
    std::map<std::vector<int>, int> seen;
    for (const auto& w : weights)
        if (++seen[w] > 1) return false;
    return true;
}

bool WeightMultiset::closed_under_negation() const {
    std::map<std::vector<int>, unsigned> count;
    for (const auto& w : weights) ++count[w];
    for (const auto& [w, c] : count) {
        std::vector<int> neg(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) neg[i] = -w[i];
        auto it = count.find(neg);
        if (it == count.end() || it->second != c) return false;
    }
    return true;
}

WeightMultiset short_root_module(const rootsys::RootSystem& rs) {
    WeightMultiset ws;
    ws.type = rs.type();
    ws.lattice = adjoint_lattice(rs);
    for (const auto& r : rs.short_roots()) {
        // Adjoint T^*-coordinates of a root are its root-lattice coordinates.
        ws.weights.emplace_back(r.begin(), r.end());
        ws.weights_in_p.push_back(rs.to_weight_coords(r));
        ws.multiplicities.push_back(1);
    }
    if (!ws.multiplicity_free()) throw std::logic_error("short roots are not multiplicity free");
    return ws;
}

WeightMultiset minuscule_module(const rootsys::RootSystem& rs, unsigned fundamental_index) {
    using rootsys::Family;
    const auto& t = rs.type();
    const bool ok = (t.family == Family::E && t.rank == 6 &&
                     (fundamental_index == 1 || fundamental_index == 6)) ||
                    (t.family == Family::E && t.rank == 7 && fundamental_index == 7) ||
                    (t.family == Family::D &&
                     (fundamental_index == t.rank || fundamental_index == t.rank - 1));
    if (!ok)
        throw RefusalError("minuscule orbits handled here: (E6, omega_1/omega_6), (E7, omega_7), "
                           "(D_n, half-spin weights); got " + t.label() + ", omega_" +
                           std::to_string(fundamental_index));

    std::vector<int> start(rs.rank(), 0);
    start[fundamental_index - 1] = 1;
    WeightMultiset ws;
    ws.type = t;
    ws.lattice = simply_connected_lattice(rs);
    for (const auto& w : weyl::orbit(rs, start)) {
        ws.weights.push_back(w);  // T^* = P for the simply connected group
        ws.weights_in_p.push_back(w);
        ws.multiplicities.push_back(1);
    }
    return ws;
}

WeightMultiset half_spin_module(const rootsys::RootSystem& rs, unsigned n) {
    if (rs.type().family != rootsys::Family::D || rs.rank() != n / 2)
        throw std::invalid_argument("half_spin_module: root system must be D_{n/2}");
    CharacterLattice lat = half_spin_lattice(n);
    std::vector<int> start(rs.rank(), 0);
    start[rs.rank() - 1] = 1;
    WeightMultiset ws;
    ws.type = rs.type();
    ws.lattice = std::move(lat);
    for (const auto& w : weyl::orbit(rs, start)) {
        ws.weights.push_back(ws.lattice.coords_of(w));
        ws.weights_in_p.push_back(w);
        ws.multiplicities.push_back(1);
    }
    return ws;
}

unsigned long c_lambda2_dim(unsigned n, unsigned p) {
    if (n < 2) throw std::domain_error("c_lambda2_dim: n >= 2 required");
    const unsigned long base = 2UL * n * n - n - 1;
    return (p != 0 && n % p == 0) ? base - 1 : base;
}

unsigned long spin_faithful_dim(unsigned n) {
    if (n < 7) throw std::domain_error("spin_faithful_dim: n >= 7 required");
    if (n % 2 == 1) return 1UL << ((n - 1) / 2);
    return n + (1UL << (n / 2 - 1));
}

}  // namespace edt::reps
