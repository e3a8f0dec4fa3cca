#include "edtool/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace edt::weyl {

Perm identity_perm(std::size_t degree) {
    Perm p(degree);
    for (std::size_t i = 0; i < degree; ++i) p[i] = std::uint16_t(i);
    return p;
}

bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

Perm compose(const Perm& p, const Perm& q) {
    Perm out(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
    return out;
}

namespace {
void compose_into(Perm& out, const Perm& p, const Perm& q) {
    out.resize(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) out[i] = p[q[i]];
}
}  // namespace

Perm inverse(const Perm& p) {
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[p[i]] = std::uint16_t(i);
    return out;
}

intlat::IntegerMatrix WeylElement::matrix(const rootsys::RootSystem& rs) const {
    const unsigned n = rs.rank();
    intlat::IntegerMatrix m(n, n);
    for (unsigned col = 0; col < n; ++col) {
        const auto& image = rs.roots()[perm_[col]];
        for (unsigned row = 0; row < n; ++row) m.at(row, col) = image[row];
    }
    return m;
}

rootsys::RootVec WeylElement::apply_to_root_coords(const rootsys::RootSystem& rs,
                                                   const rootsys::RootVec& v) const {
    const unsigned n = rs.rank();
    if (v.size() != n) throw std::invalid_argument("apply_to_root_coords: wrong length");
    rootsys::RootVec out(n, 0);
    for (unsigned i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        const auto& image = rs.roots()[perm_[i]];
        for (unsigned k = 0; k < n; ++k) out[k] += v[i] * image[k];
    }
    return out;
}

std::vector<int> WeylElement::apply_to_weight_coords(const rootsys::RootSystem& rs,
                                                     const std::vector<int>& v) const {
    const unsigned n = rs.rank();
    if (v.size() != n) throw std::invalid_argument("apply_to_weight_coords: wrong length");
    // (wv)_j = <v, (w^{-1} alpha_j)^vee>
    std::vector<int> out(n);
    Perm inv = inverse(perm_);
    for (unsigned j = 0; j < n; ++j) out[j] = rs.weight_pairing(v, rs.roots()[inv[j]]);
    return out;
}

WeylElement simple_reflection(const rootsys::RootSystem& rs, unsigned bourbaki_index) {
    const auto& roots = rs.roots();
    Perm p(roots.size());
    for (std::size_t r = 0; r < roots.size(); ++r) {
        int idx = rs.root_index(rs.reflect(bourbaki_index, roots[r]));
        if (idx < 0) throw std::logic_error("reflection image is not a root");
        p[r] = std::uint16_t(idx);
    }
    return WeylElement(std::move(p), {bourbaki_index});
}

WeylElement minus_identity(const rootsys::RootSystem& rs) {
    const auto& roots = rs.roots();
    Perm p(roots.size());
    for (std::size_t r = 0; r < roots.size(); ++r) {
        rootsys::RootVec neg(roots[r].size());
        for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -roots[r][i];
        p[r] = std::uint16_t(rs.root_index(neg));
    }
    return WeylElement(std::move(p));
}

WeylElement compose(const rootsys::RootSystem&, const WeylElement& a, const WeylElement& b) {
    std::vector<unsigned> word;
    if ((!a.word().empty() || a.is_identity_element()) &&
        (!b.word().empty() || b.is_identity_element()) &&
        a.word().size() + b.word().size() <= 1024) {
        word = a.word();
        word.insert(word.end(), b.word().begin(), b.word().end());
    }
    return WeylElement(compose(a.root_perm(), b.root_perm()), std::move(word));
}

WeylElement from_word(const rootsys::RootSystem& rs, const std::vector<unsigned>& word) {
    Perm acc = identity_perm(rs.root_count());
    for (unsigned i : word) acc = compose(acc, simple_reflection(rs, i).root_perm());
    return WeylElement(std::move(acc), word);
}

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(std::vector<Perm> generators, std::size_t degree,
                                 std::vector<std::uint32_t> forced_base,
                                 std::vector<std::uint32_t> base_hints)
    : degree_(degree), hints_(std::move(base_hints)) {
    for (std::uint32_t b : forced_base) {
        Level lvl;
        lvl.base = b;
        levels_.push_back(std::move(lvl));
        rebuild_orbit(levels_.size() - 1);
    }
    for (Perm& g : generators) {
        if (g.size() != degree_) throw std::invalid_argument("generator degree mismatch");
        if (is_identity(g)) continue;
        std::size_t k = 0;
        for (;;) {
            if (k == levels_.size()) {
                Level lvl;
                lvl.base = pick_base_point(g);
                levels_.push_back(std::move(lvl));
                rebuild_orbit(k);
            }
            if (g[levels_[k].base] != levels_[k].base) break;
            ++k;
        }
        for (std::size_t j = 0; j <= k; ++j) levels_[j].gens.push_back(g);
        for (std::size_t j = 0; j <= k; ++j) rebuild_orbit(j);
    }
    for (std::size_t l = levels_.size(); l-- > 0;) complete_level(l);
    order_ = 1;
    for (const Level& lvl : levels_) order_ *= static_cast<unsigned long>(lvl.orbit.size());
}

std::uint32_t StabilizerChain::pick_base_point(const Perm& moved_by) {
    auto in_base = [&](std::uint32_t p) {
        for (const Level& lvl : levels_)
            if (lvl.base == p) return true;
        return false;
    };
    for (std::uint32_t h : hints_)
        if (moved_by[h] != h && !in_base(h)) return h;
    for (std::uint32_t p = 0; p < degree_; ++p)
        if (moved_by[p] != p && !in_base(p)) return p;
    throw std::logic_error("no base point available for a non-identity permutation");
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
    Level& lvl = levels_[level];
    lvl.orbit.clear();
    lvl.transversal.clear();
    lvl.where.assign(degree_, -1);
    lvl.orbit.push_back(lvl.base);
    lvl.where[lvl.base] = 0;
    lvl.transversal.push_back(identity_perm(degree_));
    for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
        for (const Perm& s : lvl.gens) {
            std::uint32_t img = s[lvl.orbit[i]];
            if (lvl.where[img] < 0) {
                lvl.where[img] = std::int32_t(lvl.orbit.size());
                lvl.orbit.push_back(img);
                lvl.transversal.push_back(compose(s, lvl.transversal[i]));
            }
        }
    }
}

std::pair<Perm, std::size_t> StabilizerChain::strip(Perm p, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
        const Level& lvl = levels_[l];
        std::uint32_t x = p[lvl.base];
        if (x == lvl.base) continue;
        std::int32_t idx = lvl.where[x];
        if (idx < 0) return {std::move(p), l};
        p = compose(inverse(lvl.transversal[idx]), p);
    }
    return {std::move(p), levels_.size()};
}

void StabilizerChain::complete_level(std::size_t level) {
    rebuild_orbit(level);
    for (std::size_t oi = 0; oi < levels_[level].orbit.size(); ++oi) {
        for (std::size_t si = 0; si < levels_[level].gens.size(); ++si) {
            Perm schreier;
            {
                const Level& lvl = levels_[level];
                const Perm& s = lvl.gens[si];
                std::uint32_t x = lvl.orbit[oi];
                const Perm& ux = lvl.transversal[oi];
                const Perm& usx = lvl.transversal[lvl.where[s[x]]];
                schreier = compose(inverse(usx), compose(s, ux));
            }
            if (is_identity(schreier)) continue;
            auto [res, k] = strip(std::move(schreier), level + 1);
            if (is_identity(res)) continue;
            if (k == levels_.size()) {
                Level lvl;
                lvl.base = pick_base_point(res);
                levels_.push_back(std::move(lvl));
                rebuild_orbit(k);
            }
            for (std::size_t j = level + 1; j <= k; ++j) levels_[j].gens.push_back(res);
            for (std::size_t j = level + 1; j <= k; ++j) rebuild_orbit(j);
            for (std::size_t j = k; j > level; --j) complete_level(j);
        }
    }
}

bool StabilizerChain::contains(const Perm& p) const {
    if (p.size() != degree_) return false;
    auto [res, lvl] = strip(p, 0);
    (void)lvl;
    return is_identity(res);
}

mpz_class StabilizerChain::suffix_order(std::size_t level) const {
    mpz_class o = 1;
    for (std::size_t l = level; l < levels_.size(); ++l)
        o *= static_cast<unsigned long>(levels_[l].orbit.size());
    return o;
}

std::vector<Perm> StabilizerChain::level_generators(std::size_t level) const {
    if (level >= levels_.size()) return {};
    return levels_[level].gens;
}

std::uint64_t StabilizerChain::for_each_element(const std::function<bool(const Perm&)>& visit) const {
    if (levels_.empty()) {
        visit(identity_perm(degree_));
        return 1;
    }
    const std::size_t m = levels_.size();
    std::vector<std::size_t> idx(m, 0);
    std::vector<Perm> prefix(m);
    prefix[0] = levels_[0].transversal[0];
    for (std::size_t j = 1; j < m; ++j) compose_into(prefix[j], prefix[j - 1], levels_[j].transversal[0]);
    std::uint64_t count = 0;
    for (;;) {
        ++count;
        if (!visit(prefix[m - 1])) return count;
        std::size_t l = m;
        for (;;) {
            if (l == 0) return count;
            --l;
            if (++idx[l] < levels_[l].transversal.size()) break;
            idx[l] = 0;
        }
        for (std::size_t j = l; j < m; ++j) {
            if (j == 0)
                prefix[0] = levels_[0].transversal[idx[0]];
            else
                compose_into(prefix[j], prefix[j - 1], levels_[j].transversal[idx[j]]);
        }
    }
}

Perm StabilizerChain::random_element(std::mt19937_64& rng) const {
    Perm g = identity_perm(degree_);
    for (const Level& lvl : levels_) {
        std::uniform_int_distribution<std::size_t> pick(0, lvl.transversal.size() - 1);
        g = compose(g, lvl.transversal[pick(rng)]);
    }
    return g;
}

// ---------------------------------------------------------------------------

StabilizerChain root_action_chain(const rootsys::RootSystem& rs) {
    std::vector<Perm> gens;
    for (unsigned i = 1; i <= rs.rank(); ++i) gens.push_back(simple_reflection(rs, i).root_perm());
    std::vector<std::uint32_t> hints;
    for (unsigned i = 0; i < rs.rank(); ++i) hints.push_back(i);
    return StabilizerChain(std::move(gens), rs.root_count(), {}, std::move(hints));
}

mpz_class weyl_order(const rootsys::RootSystem& rs) { return root_action_chain(rs).order(); }

std::uint64_t default_enum_limit() {
    if (const char* env = std::getenv("EDTOOL_ENUM_LIMIT")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10'000'000ULL;
}

namespace {

// Elements are determined by the images of the simple roots, which pack into
// one u64 for rank <= 8 (root indices < 256).
std::uint64_t pack_key(const Perm& p, unsigned rank) {
    std::uint64_t key = 0;
    for (unsigned i = 0; i < rank; ++i) key = (key << 8) | std::uint64_t(p[i] & 0xff);
    return key;
}

}  // namespace

std::vector<WeylElement> enumerate(const rootsys::RootSystem& rs, std::uint64_t limit) {
    mpz_class order = weyl_order(rs);
    if (order > static_cast<unsigned long>(limit))
        throw RefusalError("enumerate: Weyl group of " + rs.type().label() + " has order " +
                           order.get_str() + ", above the limit " + std::to_string(limit) +
                           "; use the stabilizer chain (order, sweeps) instead");

    std::vector<Perm> gens;
    for (unsigned i = 1; i <= rs.rank(); ++i) gens.push_back(simple_reflection(rs, i).root_perm());

    const bool packable = rs.rank() <= 8 && rs.root_count() < 256;
    std::unordered_set<std::uint64_t> seen_packed;
    std::set<Perm> seen_full;
    auto mark = [&](const Perm& p) {
        if (packable) return seen_packed.insert(pack_key(p, rs.rank())).second;
        return seen_full.insert(p).second;
    };

    std::vector<WeylElement> out;
    std::deque<std::size_t> frontier;  // indices into out
    WeylElement id(identity_perm(rs.root_count()), {});
    mark(id.root_perm());
    out.push_back(std::move(id));
    frontier.push_back(0);
    while (!frontier.empty()) {
        std::size_t cur = frontier.front();
        frontier.pop_front();
        for (unsigned gi = 0; gi < gens.size(); ++gi) {
            Perm next = compose(out[cur].root_perm(), gens[gi]);
            if (!mark(next)) continue;
            std::vector<unsigned> word = out[cur].word();
            word.push_back(gi + 1);
            out.emplace_back(std::move(next), std::move(word));
            frontier.push_back(out.size() - 1);
        }
    }
    return out;
}

std::vector<WeylElement> enumerate(const rootsys::RootSystem& rs) {
    return enumerate(rs, default_enum_limit());
}

std::uint64_t bfs_count(const rootsys::RootSystem& rs, std::uint64_t limit) {
    std::vector<Perm> gens;
    for (unsigned i = 1; i <= rs.rank(); ++i) gens.push_back(simple_reflection(rs, i).root_perm());
    const bool packable = rs.rank() <= 8 && rs.root_count() < 256;
    std::unordered_set<std::uint64_t> seen_packed;
    std::set<Perm> seen_full;
    auto mark = [&](const Perm& p) {
        if (packable) return seen_packed.insert(pack_key(p, rs.rank())).second;
        return seen_full.insert(p).second;
    };
    std::deque<Perm> frontier;
    Perm id = identity_perm(rs.root_count());
    mark(id);
    frontier.push_back(std::move(id));
    std::uint64_t count = 1;
    while (!frontier.empty()) {
        Perm cur = std::move(frontier.front());
        frontier.pop_front();
        for (const Perm& g : gens) {
            Perm next = compose(cur, g);
            if (!mark(next)) continue;
            if (++count > limit)
                throw RefusalError("BFS count exceeded the limit " + std::to_string(limit));
            frontier.push_back(std::move(next));
        }
    }
    return count;
}

std::set<std::vector<int>> orbit(const rootsys::RootSystem& rs, const std::vector<int>& weight_coords) {
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    seen.insert(weight_coords);
    queue.push_back(weight_coords);
    while (!queue.empty()) {
        auto v = std::move(queue.front());
        queue.pop_front();
        for (unsigned i = 1; i <= rs.rank(); ++i) {
            auto w = rs.reflect_weight(i, v);
            if (seen.insert(w).second) queue.push_back(w);
        }
    }
    return seen;
}

mpz_class order(const GroupHandle& g) { return g.order; }

namespace {

bool elementary_abelian_2(const std::vector<Perm>& gens) {
    for (const Perm& g : gens)
        if (!is_identity(compose(g, g))) return false;
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (compose(gens[i], gens[j]) != compose(gens[j], gens[i])) return false;
    return true;
}

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

GroupHandle kernel_mod_p(const rootsys::RootSystem& rs, unsigned p, bool include_minus_one) {
    if (!is_prime(p)) throw std::domain_error("kernel_mod_p: p must be prime");
    const unsigned n = rs.rank();
    const std::size_t nroots = rs.root_count();

    auto reduce = [&](rootsys::RootVec v) {
        for (int& x : v) x = ((x % int(p)) + int(p)) % int(p);
        return v;
    };

    // Action generators on the root lattice.
    std::vector<WeylElement> action;
    for (unsigned i = 1; i <= n; ++i) action.push_back(simple_reflection(rs, i));
    if (include_minus_one) action.push_back(minus_identity(rs));

    // Orbit closure of the simple-root images inside F_p^n.
    std::map<rootsys::RootVec, std::uint32_t> id_of;
    std::vector<rootsys::RootVec> points;
    std::deque<std::uint32_t> queue;
    for (unsigned i = 0; i < n; ++i) {
        rootsys::RootVec e(n, 0);
        e[i] = 1;
        auto [it, fresh] = id_of.emplace(reduce(e), std::uint32_t(points.size()));
        if (fresh) {
            points.push_back(it->first);
            queue.push_back(it->second);
        }
    }
    while (!queue.empty()) {
        std::uint32_t cur = queue.front();
        queue.pop_front();
        for (const WeylElement& w : action) {
            auto img = reduce(w.apply_to_root_coords(rs, points[cur]));
            auto [it, fresh] = id_of.emplace(img, std::uint32_t(points.size()));
            if (fresh) {
                points.push_back(it->first);
                queue.push_back(it->second);
            }
        }
    }
    const std::size_t nmod = points.size();
    const std::size_t degree = nmod + nroots;

    // Combined permutations: mod-p part first, root indices after.
    std::vector<Perm> gens;
    for (const WeylElement& w : action) {
        Perm g(degree);
        for (std::size_t m = 0; m < nmod; ++m)
            g[m] = std::uint16_t(id_of.at(reduce(w.apply_to_root_coords(rs, points[m]))));
        for (std::size_t r = 0; r < nroots; ++r) g[nmod + r] = std::uint16_t(nmod + w.root_perm()[r]);
        gens.push_back(std::move(g));
    }

    std::vector<std::uint32_t> forced;
    for (unsigned i = 0; i < n; ++i) {
        rootsys::RootVec e(n, 0);
        e[i] = 1;
        forced.push_back(id_of.at(reduce(e)));
    }
    // Duplicate forced points collapse to a single level each; keep them unique.
    std::vector<std::uint32_t> forced_unique;
    for (std::uint32_t f : forced)
        if (std::find(forced_unique.begin(), forced_unique.end(), f) == forced_unique.end())
            forced_unique.push_back(f);
    std::vector<std::uint32_t> hints;
    for (unsigned i = 0; i < n; ++i) hints.push_back(std::uint32_t(nmod + i));

    StabilizerChain chain(gens, degree, forced_unique, hints);
    const std::size_t cut = forced_unique.size();

    GroupHandle out;
    out.order = chain.suffix_order(cut);
    std::vector<Perm> kgens_combined = chain.level_generators(cut);
    std::vector<Perm> kgens_roots;
    for (const Perm& g : kgens_combined) {
        Perm rp(nroots);
        for (std::size_t r = 0; r < nroots; ++r) rp[r] = std::uint16_t(g[nmod + r] - nmod);
        kgens_roots.push_back(rp);
        out.generators.emplace_back(std::move(rp));
    }
    out.elementary_abelian_2 = out.order > 1 && elementary_abelian_2(kgens_combined);
    std::vector<std::uint32_t> root_hints;
    for (unsigned i = 0; i < n; ++i) root_hints.push_back(i);
    out.chain = std::make_shared<StabilizerChain>(
        std::vector<Perm>(kgens_roots), nroots, std::vector<std::uint32_t>{}, root_hints);
    if (out.chain->order() != out.order)
        throw std::logic_error("kernel_mod_p: root-action order disagrees with the chain");
    out.description = "kernel of the mod-" + std::to_string(p) + " reduction of " +
                      std::string(include_minus_one ? "<W,-1>" : "W") + " for " + rs.type().label();
    return out;
}

std::string abelian_2_structure(const GroupHandle& g) {
    if (g.order == 1) return "trivial";
    if (g.elementary_abelian_2) {
        // order is 2^k for commuting involutions
        std::size_t k = mpz_sizeinbase(g.order.get_mpz_t(), 2) - 1;
        if (k == 1) return "Z/2";
        return "(Z/2)^" + std::to_string(k);
    }
    return "order " + g.order.get_str();
}

WeylElement sign_flip_element(const rootsys::RootSystem& rs, std::uint32_t mask) {
    using rootsys::Family;
    Family fam = rs.type().family;
    if (fam != Family::B && fam != Family::C && fam != Family::D)
        throw std::domain_error("sign_flip_element: type must be B, C, or D");
    const unsigned n = rs.rank();
    if (mask >= (1u << n)) throw std::domain_error("sign_flip_element: mask out of range");
    if (fam == Family::D && (__builtin_popcount(mask) % 2) != 0)
        throw std::domain_error("sign_flip_element: odd flips lie outside the Weyl group of D_n");

    // Simple roots in eps coordinates, as a square matrix (columns); the
    // flip written back to the simple-root basis and applied to every root.
    intlat::IntegerMatrix embed(n, n);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned k = 0; k < n; ++k) embed.at(k, i) = rs.ambient_columns()[i][k];
    intlat::IntegerMatrix embed_t = embed.transposed();

    intlat::IntegerMatrix flip(n, n);
    for (unsigned col = 0; col < n; ++col) {
        intlat::Vec amb(n);
        for (unsigned k = 0; k < n; ++k)
            amb[k] = (mask >> k & 1u) ? -rs.ambient_columns()[col][k] : rs.ambient_columns()[col][k];
        auto x = intlat::solve_left_integral(embed_t, amb);
        if (!x) throw std::logic_error("sign flip does not preserve the root lattice");
        for (unsigned k = 0; k < n; ++k) flip.at(k, col) = (*x)[k];
    }
    Perm perm(rs.root_count());
    for (std::size_t r = 0; r < rs.root_count(); ++r) {
        intlat::Vec v(rs.roots()[r].begin(), rs.roots()[r].end());
        auto img = flip.apply(v);
        rootsys::RootVec iv(n);
        for (unsigned k = 0; k < n; ++k) iv[k] = int(img[k].get_si());
        int idx = rs.root_index(iv);
        if (idx < 0) throw std::logic_error("sign flip image is not a root");
        perm[r] = std::uint16_t(idx);
    }
    return WeylElement(std::move(perm));
}

GroupHandle sign_flip_subgroup(const rootsys::RootSystem& rs) {
    using rootsys::Family;
    Family fam = rs.type().family;
    if (fam != Family::B && fam != Family::C && fam != Family::D)
        throw std::domain_error("sign_flip_subgroup: type must be B, C, or D");
    const unsigned n = rs.rank();

    GroupHandle out;
    out.description = "even sign flips of " + rs.type().label();
    std::vector<Perm> perms;
    for (unsigned j = 1; j < n; ++j) {
        auto el = sign_flip_element(rs, 1u | (1u << j));
        perms.push_back(el.root_perm());
        out.generators.push_back(std::move(el));
    }
    out.elementary_abelian_2 = elementary_abelian_2(perms);
    out.chain = std::make_shared<StabilizerChain>(std::move(perms), rs.root_count());
    out.order = out.chain->order();
    return out;
}

StabilizerChain normal_closure(const std::vector<Perm>& group_gens, const Perm& seed,
                               std::size_t degree) {
    std::vector<Perm> closure_gens{seed};
    StabilizerChain chain(closure_gens, degree);
    std::deque<Perm> queue{seed};
    while (!queue.empty()) {
        Perm x = std::move(queue.front());
        queue.pop_front();
        for (const Perm& s : group_gens) {
            Perm conj = compose(s, compose(x, inverse(s)));
            if (chain.contains(conj)) continue;
            closure_gens.push_back(conj);
            chain = StabilizerChain(closure_gens, degree);
            queue.push_back(std::move(conj));
        }
    }
    return chain;
}

}  // namespace edt::weyl
