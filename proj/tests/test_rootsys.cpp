#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "edtool/rootsys.hpp"

using namespace edt::rootsys;
using edt::intlat::generates_full_lattice;
using edt::intlat::Vec;

namespace {

std::vector<DynkinType> all_types_up_to_rank(unsigned max_rank) {
    std::vector<DynkinType> out;
    for (unsigned n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
    for (unsigned n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
    for (unsigned n = 3; n <= max_rank; ++n) out.push_back({Family::C, n});
    for (unsigned n = 3; n <= max_rank; ++n) out.push_back({Family::D, n});
    for (unsigned n : {6u, 7u, 8u})
        if (n <= max_rank) out.push_back({Family::E, n});
    if (max_rank >= 4) out.push_back({Family::F, 4});
    if (max_rank >= 2) out.push_back({Family::G, 2});
    return out;
}

std::vector<Vec> to_int_vecs(const std::vector<RootVec>& roots) {
    std::vector<Vec> out;
    for (const auto& r : roots) out.emplace_back(r.begin(), r.end());
    return out;
}

}  // namespace

TEST_CASE("root counts match the classification for every type of rank <= 8") {
    for (const auto& t : all_types_up_to_rank(8)) {
        auto rs = RootSystem::build(t);
        const unsigned long n = t.rank;
        std::size_t expect = 0;
        switch (t.family) {
            case Family::A: expect = n * (n + 1); break;
            case Family::B:
            case Family::C: expect = 2 * n * n; break;
            case Family::D: expect = 2 * n * (n - 1); break;
            case Family::E: expect = n == 6 ? 72 : (n == 7 ? 126 : 240); break;
            case Family::F: expect = 48; break;
            case Family::G: expect = 12; break;
        }
        CAPTURE(t.label());
        CHECK(rs.root_count() == expect);
    }
}

TEST_CASE("A1 has roots {alpha, -alpha}") {
    auto rs = RootSystem::build(Family::A, 1);
    REQUIRE(rs.root_count() == 2);
    CHECK(rs.is_root({1}));
    CHECK(rs.is_root({-1}));
}

TEST_CASE("short root counts") {
    CHECK(RootSystem::build(Family::F, 4).short_roots().size() == 24);
    CHECK(RootSystem::build(Family::E, 6).short_roots().size() == 72);  // simply laced
    CHECK(RootSystem::build(Family::B, 3).short_roots().size() == 6);
    auto c3 = RootSystem::build(Family::C, 3);
    CHECK(c3.root_count() == 18);
    CHECK(c3.short_roots().size() == 12);
    CHECK(RootSystem::build(Family::G, 2).short_roots().size() == 6);
}

TEST_CASE("B3 short roots are the +-eps_i") {
    auto rs = RootSystem::build(Family::B, 3);
    std::set<std::vector<int>> eps;
    for (const auto& r : rs.short_roots()) eps.insert(rs.to_ambient(r));
    std::set<std::vector<int>> expect = {{1, 0, 0},  {0, 1, 0},  {0, 0, 1},
                                         {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};
    CHECK(eps == expect);
}

TEST_CASE("inadmissible ranks are rejected") {
    CHECK_THROWS_AS(RootSystem::build(Family::E, 5), std::domain_error);
    CHECK_THROWS_AS(RootSystem::build(Family::D, 2), std::domain_error);
    CHECK_THROWS_AS(RootSystem::build(Family::F, 5), std::domain_error);
    CHECK_THROWS_AS(DynkinType::parse("B1"), std::domain_error);
    CHECK(DynkinType::parse("D10").rank == 10);
}

TEST_CASE("C2 is normalized to B2 with the requested label kept") {
    auto rs = RootSystem::build(Family::C, 2);
    CHECK(rs.type().family == Family::B);
    CHECK(rs.requested_label() == "C2");
}

TEST_CASE("pairing values") {
    auto a2 = RootSystem::build(Family::A, 2);
    for (const auto& r : a2.roots()) CHECK(a2.pairing(r, r) == 2);
    CHECK(a2.pairing(a2.simple_root(1), a2.simple_root(2)) == -1);

    auto b2 = RootSystem::build(Family::B, 2);
    int p12 = b2.pairing(b2.simple_root(1), b2.simple_root(2));
    int p21 = b2.pairing(b2.simple_root(2), b2.simple_root(1));
    // Bourbaki B2: alpha_1 long, alpha_2 short; either orientation of the
    // double bond shows up as the pair {-1, -2}.
    CHECK(std::set<int>{p12, p21} == std::set<int>{-1, -2});
    CHECK_THROWS_AS(b2.pairing(b2.simple_root(1), {0, 0}), std::domain_error);
}

TEST_CASE("roots are closed under negation and pairings stay in range") {
    for (const auto& t : all_types_up_to_rank(8)) {
        auto rs = RootSystem::build(t);
        CAPTURE(t.label());
        for (const auto& r : rs.roots()) {
            RootVec neg(r.size());
            for (std::size_t i = 0; i < r.size(); ++i) neg[i] = -r[i];
            CHECK(rs.is_root(neg));
        }
        for (const auto& b : rs.roots())
            for (const auto& a : rs.roots()) {
                int p = rs.pairing(b, a);
                CHECK(p >= -3);
                CHECK(p <= 3);
                RootVec nega(a.size());
                for (std::size_t i = 0; i < a.size(); ++i) nega[i] = -a[i];
                if (b != a && b != nega) {
                    int q = rs.pairing(a, b);
                    CHECK(p * q >= 0);
                    CHECK(p * q <= 3);
                }
            }
        if (rs.root_count() > 60) break;  // full quadratic scan only for small systems
    }
    // Spot check one large system.
    auto e7 = RootSystem::build(Family::E, 7);
    for (const auto& a : e7.roots()) CHECK(e7.pairing(a, a) == 2);
}

TEST_CASE("has_minus_one matches the classification") {
    CHECK(RootSystem::build(Family::A, 1).has_minus_one());
    CHECK_FALSE(RootSystem::build(Family::A, 2).has_minus_one());
    CHECK_FALSE(RootSystem::build(Family::A, 7).has_minus_one());
    CHECK(RootSystem::build(Family::B, 4).has_minus_one());
    CHECK(RootSystem::build(Family::C, 3).has_minus_one());
    CHECK(RootSystem::build(Family::D, 4).has_minus_one());
    CHECK_FALSE(RootSystem::build(Family::D, 5).has_minus_one());
    CHECK(RootSystem::build(Family::D, 6).has_minus_one());
    CHECK_FALSE(RootSystem::build(Family::E, 6).has_minus_one());
    CHECK(RootSystem::build(Family::E, 7).has_minus_one());
    CHECK(RootSystem::build(Family::E, 8).has_minus_one());
    CHECK(RootSystem::build(Family::F, 4).has_minus_one());
    CHECK(RootSystem::build(Family::G, 2).has_minus_one());
}

TEST_CASE("short witness triples") {
    auto c3 = RootSystem::build(Family::C, 3);
    auto [x1, x2, x3] = c3.short_witness_triple();
    CHECK(c3.to_ambient(x1) == std::vector<int>{1, -1, 0});
    CHECK(c3.to_ambient(x2) == std::vector<int>{0, 1, -1});
    CHECK(c3.to_ambient(x3) == std::vector<int>{-1, 0, 1});

    auto a2 = RootSystem::build(Family::A, 2);
    auto tr = a2.short_witness_triple();
    CHECK(tr[0] == RootVec{1, 0});
    CHECK(tr[1] == RootVec{0, 1});
    CHECK(tr[2] == RootVec{-1, -1});

    auto f4 = RootSystem::build(Family::F, 4);
    auto ft = f4.short_witness_triple();
    for (const auto& chi : ft) {
        CHECK(f4.is_root(chi));
        CHECK(f4.is_short(chi));
    }
    RootVec sum(4, 0);
    for (const auto& chi : ft)
        for (int i = 0; i < 4; ++i) sum[i] += chi[i];
    CHECK(sum == RootVec{0, 0, 0, 0});
    CHECK(ft[0] == f4.simple_root(3));
    CHECK(ft[1] == f4.simple_root(4));

    CHECK_THROWS_AS(RootSystem::build(Family::A, 1).short_witness_triple(), std::domain_error);
    CHECK_THROWS_AS(RootSystem::build(Family::B, 4).short_witness_triple(), std::domain_error);
    CHECK_THROWS_AS(RootSystem::build(Family::G, 2).short_witness_triple(), std::domain_error);
}

TEST_CASE("for every short root there is a short partner with pairing +-1") {
    // Holds exactly for the types with two non-orthogonal short simple roots
    // (the short-root certificate list); B_n short roots are orthogonal.
    std::vector<DynkinType> list;
    for (unsigned n = 2; n <= 8; ++n) list.push_back({Family::A, n});
    for (unsigned n = 3; n <= 8; ++n) list.push_back({Family::C, n});
    for (unsigned n = 4; n <= 8; ++n) list.push_back({Family::D, n});
    list.push_back({Family::E, 6});
    list.push_back({Family::E, 7});
    list.push_back({Family::E, 8});
    list.push_back({Family::F, 4});
    for (const auto& t : list) {
        auto rs = RootSystem::build(t);
        CAPTURE(t.label());
        auto shorts = rs.short_roots();
        for (const auto& a : shorts) {
            bool found = false;
            for (const auto& b : shorts) {
                int p = rs.pairing(b, a);
                if (p == 1 || p == -1) {
                    found = true;
                    break;
                }
            }
            CHECK(found);
        }
    }
}

TEST_CASE("short roots generate the root lattice for every type in the short-root list") {
    std::vector<DynkinType> list;
    for (unsigned n = 2; n <= 7; ++n) list.push_back({Family::A, n});
    for (unsigned n = 3; n <= 6; ++n) list.push_back({Family::C, n});
    for (unsigned n = 4; n <= 7; ++n) list.push_back({Family::D, n});
    list.push_back({Family::E, 6});
    list.push_back({Family::E, 7});
    list.push_back({Family::E, 8});
    list.push_back({Family::F, 4});
    for (const auto& t : list) {
        auto rs = RootSystem::build(t);
        CAPTURE(t.label());
        CHECK(generates_full_lattice(to_int_vecs(rs.short_roots()), rs.rank()));
    }
}

TEST_CASE("weight coordinate conversion is compatible with reflections") {
    auto rs = RootSystem::build(Family::F, 4);
    for (const auto& r : rs.roots())
        for (unsigned i = 1; i <= 4; ++i) {
            auto lhs = rs.to_weight_coords(rs.reflect(i, r));
            auto rhs = rs.reflect_weight(i, rs.to_weight_coords(r));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("longest element word has length = number of positive roots") {
    for (const auto& t : all_types_up_to_rank(8)) {
        auto rs = RootSystem::build(t);
        CAPTURE(t.label());
        CHECK(rs.longest_element_word().size() == rs.root_count() / 2);
    }
}
