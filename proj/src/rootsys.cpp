#include "edtool/rootsys.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace edt::rootsys {

bool DynkinType::admissible() const {
    switch (family) {
        case Family::A: return rank >= 1;
        case Family::B: return rank >= 2;
        case Family::C: return rank >= 2;
        case Family::D: return rank >= 3;
        case Family::E: return rank == 6 || rank == 7 || rank == 8;
        case Family::F: return rank == 4;
        case Family::G: return rank == 2;
    }
    return false;
}

std::string DynkinType::label() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

DynkinType DynkinType::parse(const std::string& s) {
    if (s.size() < 2) throw std::domain_error("bad Dynkin type label: " + s);
    char f = s[0];
    if (f < 'A' || f > 'G') throw std::domain_error("bad Dynkin family: " + s);
    unsigned rank = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::domain_error("bad Dynkin rank: " + s);
        rank = rank * 10 + static_cast<unsigned>(s[i] - '0');
    }
    DynkinType t{static_cast<Family>(f), rank};
    if (!t.admissible()) throw std::domain_error("inadmissible Dynkin type: " + s);
    return t;
}

namespace {

// cartan[i][j] = <alpha_i, alpha_j^vee>, 0-based here.
std::vector<int> cartan_entries(const DynkinType& t) {
    const unsigned n = t.rank;
    std::vector<int> c(n * n, 0);
    auto at = [&](unsigned i, unsigned j) -> int& { return c[i * n + j]; };
    for (unsigned i = 0; i < n; ++i) at(i, i) = 2;
    auto edge = [&](unsigned i, unsigned j) { at(i, j) = at(j, i) = -1; };  // 0-based

    switch (t.family) {
        case Family::A:
            for (unsigned i = 0; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case Family::B:
            for (unsigned i = 0; i + 2 < n; ++i) edge(i, i + 1);
            // alpha_{n-1} long, alpha_n short.
            at(n - 2, n - 1) = -2;
            at(n - 1, n - 2) = -1;
            break;
        case Family::C:
            for (unsigned i = 0; i + 2 < n; ++i) edge(i, i + 1);
            // alpha_{n-1} short, alpha_n long.
            at(n - 2, n - 1) = -1;
            at(n - 1, n - 2) = -2;
            break;
        case Family::D:
            for (unsigned i = 0; i + 2 < n; ++i) edge(i, i + 1);
            edge(n - 3, n - 1);
            break;
        case Family::E:
            // Bourbaki: chain 1-3-4-5-6(-7)(-8), node 2 attached to 4.
            edge(0, 2);
            edge(2, 3);
            edge(1, 3);
            for (unsigned i = 4; i < n; ++i) edge(i - 1, i);
            break;
        case Family::F:
            edge(0, 1);
            at(1, 2) = -2;
            at(2, 1) = -1;
            edge(2, 3);
            break;
        case Family::G:
            // alpha_1 short, alpha_2 long.
            at(0, 1) = -1;
            at(1, 0) = -3;
            break;
    }
    return c;
}

// Scaled half square lengths d_i = (alpha_i, alpha_i)/2, integerized.
std::vector<long> half_lengths(const DynkinType& t) {
    const unsigned n = t.rank;
    std::vector<long> d(n, 1);
    switch (t.family) {
        case Family::B:
            for (unsigned i = 0; i + 1 < n; ++i) d[i] = 2;
            break;
        case Family::C:
            d[n - 1] = 2;
            break;
        case Family::F:
            d[0] = d[1] = 2;
            break;
        case Family::G:
            d[1] = 3;
            break;
        default: break;
    }
    return d;
}

std::vector<std::vector<int>> ambient_columns_for(const DynkinType& t) {
    const unsigned n = t.rank;
    std::vector<std::vector<int>> cols;
    auto basis_diff = [&](unsigned dim, unsigned i) {
        std::vector<int> v(dim, 0);
        v[i] = 1;
        v[i + 1] = -1;
        return v;
    };
    switch (t.family) {
        case Family::A:
            for (unsigned i = 0; i < n; ++i) cols.push_back(basis_diff(n + 1, i));
            break;
        case Family::B: {
            for (unsigned i = 0; i + 1 < n; ++i) cols.push_back(basis_diff(n, i));
            std::vector<int> last(n, 0);
            last[n - 1] = 1;
            cols.push_back(last);
            break;
        }
        case Family::C: {
            for (unsigned i = 0; i + 1 < n; ++i) cols.push_back(basis_diff(n, i));
            std::vector<int> last(n, 0);
            last[n - 1] = 2;
            cols.push_back(last);
            break;
        }
        case Family::D: {
            for (unsigned i = 0; i + 1 < n; ++i) cols.push_back(basis_diff(n, i));
            std::vector<int> last(n, 0);
            last[n - 2] = 1;
            last[n - 1] = 1;
            cols.push_back(last);
            break;
        }
        default: break;  // no integral eps-embedding kept for E/F/G
    }
    return cols;
}

}  // namespace

std::size_t root_count_of(const DynkinType& t) {
    const unsigned long n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 1);
        case Family::B:
        case Family::C: return 2 * n * n;
        case Family::D: return 2 * n * (n - 1);
        case Family::E: return t.rank == 6 ? 72 : (t.rank == 7 ? 126 : 240);
        case Family::F: return 48;
        case Family::G: return 12;
    }
    return 0;
}

std::size_t short_root_count_of(const DynkinType& t) {
    const unsigned long n = t.rank;
    switch (t.family) {
        case Family::B: return 2 * n;
        case Family::C: return n == 2 ? 4 : 2 * n * (n - 1);
        case Family::F: return 24;
        case Family::G: return 6;
        default: return root_count_of(t);  // simply laced
    }
}

RootSystem RootSystem::build(DynkinType type) {
    if (!type.admissible()) throw std::domain_error("inadmissible Dynkin type: " + type.label());
    RootSystem rs;
    rs.requested_label_ = type.label();
    if (type.family == Family::C && type.rank == 2) type = {Family::B, 2};
    rs.type_ = type;
    const unsigned n = type.rank;

    rs.cartan_ = cartan_entries(type);
    rs.half_lengths_ = half_lengths(type);
    const auto& d = rs.half_lengths_;
    rs.gram_.assign(std::size_t(n) * n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            rs.gram_[std::size_t(i) * n + j] = long(rs.cartan_[std::size_t(i) * n + j]) * d[j];
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            if (rs.gram_[std::size_t(i) * n + j] != rs.gram_[std::size_t(j) * n + i])
                throw std::logic_error("asymmetric Gram matrix for " + type.label());

    // Close the simple roots under the simple reflections.
    std::deque<RootVec> queue;
    for (unsigned i = 0; i < n; ++i) {
        RootVec e(n, 0);
        e[i] = 1;
        rs.index_.emplace(e, int(rs.roots_.size()));
        rs.roots_.push_back(e);
        queue.push_back(std::move(e));
    }
    while (!queue.empty()) {
        RootVec v = std::move(queue.front());
        queue.pop_front();
        for (unsigned i = 1; i <= n; ++i) {
            RootVec w = rs.reflect(i, v);
            if (rs.index_.emplace(w, int(rs.roots_.size())).second) {
                rs.roots_.push_back(w);
                queue.push_back(std::move(w));
            }
        }
    }
    if (rs.roots_.size() != root_count_of(type))
        throw std::logic_error("root count mismatch for " + type.label());

    long min_len = 0, max_len = 0;
    for (const RootVec& r : rs.roots_) {
        long l = rs.length2(r);
        if (min_len == 0 || l < min_len) min_len = l;
        if (l > max_len) max_len = l;
    }
    rs.short_len2_ = min_len;
    rs.simply_laced_ = (min_len == max_len);

    // Longest element: drag the strictly dominant weight (1,...,1) to the
    // antidominant chamber, recording the reflections used.
    std::vector<int> p(n, 1);
    for (;;) {
        unsigned i = 0;
        while (i < n && p[i] <= 0) ++i;
        if (i == n) break;
        p = rs.reflect_weight(i + 1, p);
        rs.longest_word_.push_back(i + 1);
    }
    bool minus = true;
    for (unsigned i = 1; i <= n && minus; ++i) {
        RootVec im(n, 0);
        im[i - 1] = 1;
        for (unsigned s : rs.longest_word_) im = rs.reflect(s, im);
        RootVec neg(n, 0);
        neg[i - 1] = -1;
        if (im != neg) minus = false;
    }
    rs.has_minus_one_ = minus;

    rs.ambient_ = ambient_columns_for(type);
    return rs;
}

RootVec RootSystem::simple_root(unsigned bourbaki_index) const {
    if (bourbaki_index < 1 || bourbaki_index > rank())
        throw std::out_of_range("simple root index out of range");
    return roots_[bourbaki_index - 1];
}

int RootSystem::cartan(unsigned i, unsigned j) const {
    if (i < 1 || i > rank() || j < 1 || j > rank())
        throw std::out_of_range("Cartan index out of range");
    return cartan_[std::size_t(i - 1) * rank() + (j - 1)];
}

intlat::IntegerMatrix RootSystem::cartan_matrix() const {
    intlat::IntegerMatrix m(rank(), rank());
    for (unsigned i = 0; i < rank(); ++i)
        for (unsigned j = 0; j < rank(); ++j) m.at(i, j) = cartan_[std::size_t(i) * rank() + j];
    return m;
}

int RootSystem::root_index(const RootVec& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

long RootSystem::length2(const RootVec& v) const {
    const unsigned n = rank();
    if (v.size() != n) throw std::invalid_argument("length2: wrong coordinate length");
    long acc = 0;
    for (unsigned i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j) acc += long(v[i]) * gram_[std::size_t(i) * n + j] * v[j];
    }
    return acc;
}

std::vector<RootVec> RootSystem::short_roots() const {
    std::vector<RootVec> out;
    for (const RootVec& r : roots_)
        if (length2(r) == short_len2_) out.push_back(r);
    return out;
}

std::vector<int> RootSystem::short_root_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < roots_.size(); ++i)
        if (length2(roots_[i]) == short_len2_) out.push_back(int(i));
    return out;
}

int RootSystem::pairing(const RootVec& beta, const RootVec& alpha) const {
    const unsigned n = rank();
    if (beta.size() != n || alpha.size() != n)
        throw std::invalid_argument("pairing: wrong coordinate length");
    long den = length2(alpha);
    if (den == 0) throw std::domain_error("pairing: alpha must be nonzero");
    long num = 0;
    for (unsigned i = 0; i < n; ++i) {
        if (beta[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j) num += long(beta[i]) * gram_[std::size_t(i) * n + j] * alpha[j];
    }
    num *= 2;
    if (num % den != 0) throw std::domain_error("pairing: alpha is not proportional to a root");
    return int(num / den);
}

RootVec RootSystem::reflect(unsigned bourbaki_index, const RootVec& v) const {
    const unsigned n = rank();
    if (bourbaki_index < 1 || bourbaki_index > n)
        throw std::out_of_range("reflection index out of range");
    if (v.size() != n) throw std::invalid_argument("reflect: wrong coordinate length");
    const unsigned i = bourbaki_index - 1;
    // <v, alpha_i^vee> = sum_j v_j c[j][i]
    int coef = 0;
    for (unsigned j = 0; j < n; ++j) coef += v[j] * cartan_[std::size_t(j) * n + i];
    RootVec out = v;
    out[i] -= coef;
    return out;
}

std::vector<int> RootSystem::reflect_weight(unsigned bourbaki_index, const std::vector<int>& v) const {
    const unsigned n = rank();
    if (bourbaki_index < 1 || bourbaki_index > n)
        throw std::out_of_range("reflection index out of range");
    if (v.size() != n) throw std::invalid_argument("reflect_weight: wrong coordinate length");
    const unsigned i = bourbaki_index - 1;
    std::vector<int> out = v;
    const int coef = v[i];
    if (coef == 0) return out;
    for (unsigned j = 0; j < n; ++j) out[j] -= coef * cartan_[std::size_t(i) * n + j];
    return out;
}

std::vector<int> RootSystem::to_weight_coords(const RootVec& v) const {
    const unsigned n = rank();
    if (v.size() != n) throw std::invalid_argument("to_weight_coords: wrong coordinate length");
    std::vector<int> out(n, 0);
    for (unsigned j = 0; j < n; ++j)
        for (unsigned i = 0; i < n; ++i) out[j] += v[i] * cartan_[std::size_t(i) * n + j];
    return out;
}

int RootSystem::weight_pairing(const std::vector<int>& weight_coords, const RootVec& beta) const {
    const unsigned n = rank();
    if (weight_coords.size() != n || beta.size() != n)
        throw std::invalid_argument("weight_pairing: wrong coordinate length");
    long den = length2(beta);
    if (den == 0) throw std::domain_error("weight_pairing: beta must be nonzero");
    // (v, beta) = sum_i b_i d_i v_i since <v, alpha_i^vee> = (v, alpha_i)/d_i.
    long num = 0;
    for (unsigned i = 0; i < n; ++i) num += long(beta[i]) * half_lengths_[i] * weight_coords[i];
    num *= 2;
    if (num % den != 0) throw std::domain_error("weight_pairing: beta is not a root");
    return int(num / den);
}

std::array<RootVec, 3> RootSystem::short_witness_triple() const {
    const unsigned n = rank();
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i + 1; j <= n; ++j) {
            const RootVec a = roots_[i - 1], b = roots_[j - 1];
            if (!is_short(a) || !is_short(b)) continue;
            if (cartan(i, j) == 0) continue;
            RootVec c(n);
            for (unsigned k = 0; k < n; ++k) c[k] = -a[k] - b[k];
            if (is_root(c) && is_short(c)) return {a, b, c};
        }
    throw std::domain_error("no pair of non-orthogonal short simple roots in " + type_.label());
}

std::vector<int> RootSystem::to_ambient(const RootVec& v) const {
    if (ambient_.empty())
        throw std::domain_error("no eps-embedding kept for " + type_.label());
    if (v.size() != rank()) throw std::invalid_argument("to_ambient: wrong coordinate length");
    std::vector<int> out(ambient_.front().size(), 0);
    for (unsigned i = 0; i < rank(); ++i)
        for (std::size_t k = 0; k < out.size(); ++k) out[k] += v[i] * ambient_[i][k];
    return out;
}

}  // namespace edt::rootsys
