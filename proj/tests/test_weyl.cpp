#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "edtool/weyl.hpp"

using namespace edt::weyl;
using edt::RefusalError;
using edt::rootsys::DynkinType;
using edt::rootsys::Family;
using edt::rootsys::RootSystem;

namespace {

mpz_class factorial(unsigned n) {
    mpz_class f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

mpz_class closed_form_order(const DynkinType& t) {
    const unsigned n = t.rank;
    switch (t.family) {
        case Family::A: return factorial(n + 1);
        case Family::B:
        case Family::C: {
            mpz_class p = factorial(n);
            mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), n);
            return p;
        }
        case Family::D: {
            mpz_class p = factorial(n);
            mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), n - 1);
            return p;
        }
        case Family::E:
            return n == 6 ? mpz_class(51840) : (n == 7 ? mpz_class(2903040) : mpz_class(696729600));
        case Family::F: return 1152;
        case Family::G: return 12;
    }
    return 0;
}

}  // namespace

TEST_CASE("simple reflections are involutions; A2 braid has order 3") {
    for (const char* label : {"A3", "B3", "G2", "F4", "D4"}) {
        auto rs = RootSystem::build(DynkinType::parse(label));
        for (unsigned i = 1; i <= rs.rank(); ++i) {
            auto s = simple_reflection(rs, i);
            CHECK(compose(rs, s, s).is_identity_element());
        }
    }
    auto a2 = RootSystem::build(Family::A, 2);
    auto s1s2 = compose(a2, simple_reflection(a2, 1), simple_reflection(a2, 2));
    auto cube = compose(a2, s1s2, compose(a2, s1s2, s1s2));
    CHECK(cube.is_identity_element());
    CHECK_FALSE(compose(a2, s1s2, s1s2).is_identity_element());
}

TEST_CASE("A1 reflection acts as -1 on the lattice") {
    auto a1 = RootSystem::build(Family::A, 1);
    auto s = simple_reflection(a1, 1);
    auto m = s.matrix(a1);
    CHECK(m.at(0, 0) == -1);
}

TEST_CASE("perm and matrix agree on every root") {
    for (const char* label : {"B3", "F4", "D5"}) {
        auto rs = RootSystem::build(DynkinType::parse(label));
        std::mt19937_64 rng(13);
        auto chain = root_action_chain(rs);
        for (int k = 0; k < 20; ++k) {
            WeylElement w(chain.random_element(rng));
            for (std::size_t r = 0; r < rs.root_count(); ++r) {
                auto image = w.apply_to_root_coords(rs, rs.roots()[r]);
                CHECK(rs.root_index(image) == int(w.root_perm()[r]));
            }
        }
    }
}

TEST_CASE("weight-coordinate action matches the root-coordinate action") {
    for (const char* label : {"B3", "C4", "F4", "E6"}) {
        auto rs = RootSystem::build(DynkinType::parse(label));
        auto chain = root_action_chain(rs);
        std::mt19937_64 rng(41);
        for (int k = 0; k < 25; ++k) {
            WeylElement w(chain.random_element(rng));
            for (std::size_t r = 0; r < rs.root_count(); r += 3) {
                auto via_weights = w.apply_to_weight_coords(rs, rs.to_weight_coords(rs.roots()[r]));
                auto via_roots = rs.to_weight_coords(w.apply_to_root_coords(rs, rs.roots()[r]));
                CHECK(via_weights == via_roots);
            }
        }
    }
}

TEST_CASE("orbit sizes of fundamental weights") {
    auto e6 = RootSystem::build(Family::E, 6);
    std::vector<int> w1(6, 0);
    w1[0] = 1;
    CHECK(orbit(e6, w1).size() == 27);

    auto e7 = RootSystem::build(Family::E, 7);
    std::vector<int> w7(7, 0);
    w7[6] = 1;
    CHECK(orbit(e7, w7).size() == 56);

    auto a1 = RootSystem::build(Family::A, 1);
    CHECK(orbit(a1, {2}).size() == 2);  // {alpha, -alpha} in weight coordinates
}

TEST_CASE("orders match the closed forms for every type of rank <= 8") {
    std::vector<DynkinType> types;
    for (unsigned n = 1; n <= 8; ++n) types.push_back({Family::A, n});
    for (unsigned n = 2; n <= 8; ++n) types.push_back({Family::B, n});
    for (unsigned n = 3; n <= 8; ++n) types.push_back({Family::C, n});
    for (unsigned n = 3; n <= 8; ++n) types.push_back({Family::D, n});
    types.push_back({Family::E, 6});
    types.push_back({Family::E, 7});
    types.push_back({Family::E, 8});
    types.push_back({Family::F, 4});
    types.push_back({Family::G, 2});
    for (const auto& t : types) {
        auto rs = RootSystem::build(t);
        CAPTURE(t.label());
        CHECK(weyl_order(rs) == closed_form_order(t));
    }
}

TEST_CASE("BFS enumeration counts match the chain orders") {
    for (const char* label : {"A2", "A4", "B3", "C4", "D4", "G2", "F4"}) {
        auto rs = RootSystem::build(DynkinType::parse(label));
        CAPTURE(label);
        auto elems = enumerate(rs, 1'000'000);
        CHECK(mpz_class(static_cast<unsigned long>(elems.size())) == weyl_order(rs));
    }
    CHECK(enumerate(RootSystem::build(Family::A, 2), 100).size() == 6);
    CHECK(enumerate(RootSystem::build(Family::F, 4), 10'000'000).size() == 1152);
}

TEST_CASE("enumerate refuses above the limit and reports the order") {
    auto e8 = RootSystem::build(Family::E, 8);
    try {
        enumerate(e8, 1'000'000);
        FAIL("expected refusal");
    } catch (const RefusalError& e) {
        CHECK(std::string(e.what()).find("696729600") != std::string::npos);
    }
}

TEST_CASE("enumerated words reproduce the permutations") {
    auto rs = RootSystem::build(Family::B, 3);
    auto elems = enumerate(rs, 100'000);
    for (std::size_t k = 0; k < elems.size(); k += 7) {
        auto rebuilt = from_word(rs, elems[k].word());
        CHECK(rebuilt == elems[k]);
    }
}

TEST_CASE("kernel of the mod-p reduction") {
    SUBCASE("B4 at p=2 is (Z/2)^4") {
        auto rs = RootSystem::build(Family::B, 4);
        auto k = kernel_mod_p(rs, 2);
        CHECK(k.order == 16);
        CHECK(k.elementary_abelian_2);
        CHECK(abelian_2_structure(k) == "(Z/2)^4");
    }
    SUBCASE("A2 at p=2 is generated by -1") {
        auto rs = RootSystem::build(Family::A, 2);
        auto k = kernel_mod_p(rs, 2);
        CHECK(k.order == 2);
        REQUIRE(k.generators.size() >= 1);
        bool has_minus = false;
        for (const auto& g : k.generators)
            if (g == minus_identity(rs)) has_minus = true;
        CHECK(has_minus);
        CHECK(abelian_2_structure(k) == "Z/2");
    }
    SUBCASE("E6 at p=3 is trivial") {
        auto rs = RootSystem::build(Family::E, 6);
        auto k = kernel_mod_p(rs, 3);
        CHECK(k.order == 1);
        CHECK(abelian_2_structure(k) == "trivial");
    }
    SUBCASE("p must be prime") {
        auto rs = RootSystem::build(Family::A, 2);
        CHECK_THROWS_AS(kernel_mod_p(rs, 4), std::domain_error);
    }
    SUBCASE("restriction to W drops the adjoined -1") {
        auto d5 = RootSystem::build(Family::D, 5);
        CHECK(kernel_mod_p(d5, 2, true).order == 2);
        CHECK(kernel_mod_p(d5, 2, false).order == 1);
    }
}

TEST_CASE("mod-p kernels agree with brute-force enumeration") {
    // Independent oracle for the forced-base stabilizer chain: reduce every
    // element of <W,-1> mod p directly and count the trivial ones.
    for (const char* label : {"A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
        auto rs = RootSystem::build(DynkinType::parse(label));
        auto elems = enumerate(rs, 2'000'000);
        auto minus = minus_identity(rs);
        for (unsigned p : {2u, 3u, 5u}) {
            long count = 0;
            const int cosets = rs.has_minus_one() ? 1 : 2;
            for (int half = 0; half < cosets; ++half) {
                for (const auto& w0 : elems) {
                    auto w = half ? compose(rs, minus, w0) : w0;
                    auto m = w.matrix(rs);
                    bool trivial = true;
                    for (unsigned i = 0; i < rs.rank() && trivial; ++i)
                        for (unsigned j = 0; j < rs.rank(); ++j) {
                            long e = m.at(i, j).get_si() - (i == j ? 1 : 0);
                            if (((e % long(p)) + long(p)) % long(p) != 0) {
                                trivial = false;
                                break;
                            }
                        }
                    if (trivial) ++count;
                }
            }
            CAPTURE(label);
            CAPTURE(p);
            CHECK(kernel_mod_p(rs, p, true).order == count);
        }
    }
}

TEST_CASE("sign flip subgroups") {
    auto c3 = RootSystem::build(Family::C, 3);
    auto h3 = sign_flip_subgroup(c3);
    CHECK(h3.order == 4);
    CHECK(h3.elementary_abelian_2);

    auto d4 = RootSystem::build(Family::D, 4);
    CHECK(sign_flip_subgroup(d4).order == 8);

    auto b2 = RootSystem::build(Family::B, 2);
    CHECK(sign_flip_subgroup(b2).order == 2);

    CHECK_THROWS_AS(sign_flip_subgroup(RootSystem::build(Family::A, 3)), std::domain_error);

    // Normality: conjugating each generator by each simple reflection stays
    // in the subgroup.
    for (const auto& g : h3.generators) {
        for (unsigned i = 1; i <= 3; ++i) {
            auto s = simple_reflection(c3, i);
            auto conj = compose(c3, s, compose(c3, g, s));
            CHECK(h3.chain->contains(conj.root_perm()));
        }
    }
}

TEST_CASE("for_each_element streams the whole group exactly once") {
    auto rs = RootSystem::build(Family::B, 3);
    auto chain = root_action_chain(rs);
    std::set<Perm> seen;
    auto visited = chain.for_each_element([&](const Perm& p) {
        seen.insert(p);
        return true;
    });
    CHECK(visited == 48);
    CHECK(seen.size() == 48);
    CHECK(chain.order() == 48);
}

TEST_CASE("normal closure of a transposition in S4 is the alternating-or-bigger subgroup") {
    auto rs = RootSystem::build(Family::A, 3);
    std::vector<Perm> gens;
    for (unsigned i = 1; i <= 3; ++i) gens.push_back(simple_reflection(rs, i).root_perm());
    auto cl = normal_closure(gens, gens[0], rs.root_count());
    CHECK(cl.order() == 24);  // transpositions generate all of S4 under conjugation

    // Normal closure of a double transposition is the Klein subgroup.
    auto s1 = gens[0], s3 = gens[2];
    auto dt = compose(s1, s3);
    auto cl2 = normal_closure(gens, dt, rs.root_count());
    CHECK(cl2.order() == 4);
}

TEST_CASE("random chain elements are members") {
    auto rs = RootSystem::build(Family::F, 4);
    auto chain = root_action_chain(rs);
    std::mt19937_64 rng(20250809);
    for (int i = 0; i < 50; ++i) CHECK(chain.contains(chain.random_element(rng)));
}
