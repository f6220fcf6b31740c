#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "suncat/deck.hpp"
#include "suncat/families.hpp"

using namespace suncat;

TEST_CASE("gen_sunshine") {
    Graph s = gen_sunshine({6, {1, 0, 0, 0, 0, 0}});
    CHECK(s.n == 7);
    CHECK(recognize(s).kind == GraphClass::sunshine);

    Graph c6 = gen_sunshine({6, {0, 0, 0, 0, 0, 0}});
    auto rec = recognize(c6);
    CHECK(rec.kind == GraphClass::sunshine);
    CHECK(rec.degenerate);

    CHECK_THROWS_AS(gen_sunshine({2, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(gen_sunshine({4, {1, 0}}), std::invalid_argument);
}

TEST_CASE("gen_caterpillar") {
    Graph star = gen_caterpillar({1, {3}});
    CHECK(star.n == 4);
    CHECK(recognize(star).kind == GraphClass::caterpillar);

    Graph cat = gen_caterpillar({3, {1, 0, 1}});
    CHECK(cat.n == 5);
    CHECK(diameter(cat) == 4);

    CHECK_THROWS_WITH_AS(gen_caterpillar({2, {0, 1}}), doctest::Contains("y_1"),
                         std::invalid_argument);
    CHECK_THROWS_WITH_AS(gen_caterpillar({2, {1, 0}}), doctest::Contains("y_p"),
                         std::invalid_argument);
    CHECK_THROWS_AS(gen_caterpillar({1, {1}}), std::invalid_argument);
}

TEST_CASE("gen_structure canonical instances") {
    auto s0a = gen_structure({StructureKind::S0a, 17});
    CHECK(s0a.supercard.c == 12);
    CHECK(s0a.supercard.graph.n == 18);
    int deg3 = 0;
    for (int i = 0; i < 12; ++i)
        if (s0a.supercard.graph.degree(i) == 3) ++deg3;
    CHECK(deg3 == 6);

    auto s1b = gen_structure({StructureKind::S1b, 19});
    CHECK(s1b.supercard.c == 12);
    for (int i = 0; i < 12; ++i) {
        int expect = i % 3 == 0 ? 4 : 2;
        CHECK(s1b.supercard.graph.degree(i) == expect);
    }

    CHECK_THROWS_WITH_AS(gen_structure({StructureKind::S0a, 16}), doctest::Contains("mod 3"),
                         std::invalid_argument);
}

TEST_CASE("every structure instance is a valid supercard pair") {
    for (auto kind : {StructureKind::S0a, StructureKind::S0b, StructureKind::S1a,
                      StructureKind::S1b, StructureKind::S2a, StructureKind::S2b}) {
        const auto& info = structure_info(kind);
        for (int rep = 0; rep < 3; ++rep) {
            int n = min_order(kind) + rep * info.n_mod;
            auto inst = gen_structure({kind, n});
            CHECK(inst.supercard.graph.n == n + 1);
            // cycle length formula
            CHECK(inst.supercard.c == info.c_num * (n + 1) / info.c_den);
            CHECK(recognize(inst.u).kind == GraphClass::sunshine);
            CHECK(recognize(inst.t).kind == GraphClass::caterpillar);
            CHECK(inst.supercard.graph.degree(inst.supercard.w) == 1);
            CHECK(inst.supercard.graph.degree(inst.supercard.v()) == 2);
        }
    }
    // S2b nu variant
    auto v2 = gen_structure({StructureKind::S2b, 20});
    CHECK(v2.supercard.nu == 2);
    auto v3 = gen_structure({StructureKind::S2b, 20, 3});
    CHECK(v3.supercard.nu == 3);
    CHECK_THROWS_AS(gen_structure({StructureKind::S1b, 19, 3}), std::invalid_argument);
}

TEST_CASE("leaf labeling places w first at x_0") {
    auto inst = gen_structure({StructureKind::S1b, 19});
    auto leaves0 = inst.supercard.leaves_at(0);
    REQUIRE(leaves0.size() == 2);
    CHECK(leaves0[0] == inst.supercard.w);
}

TEST_CASE("enumerate_family matches expectations and brute force") {
    auto cats4 = enumerate_family(GraphClass::caterpillar, 4);
    CHECK(cats4.size() == 2);  // P4 and the star

    auto suns4 = enumerate_family(GraphClass::sunshine, 4);
    CHECK(suns4.size() == 2);  // C4 and C3 plus a leaf

    CHECK(enumerate_family(GraphClass::caterpillar, 1).size() == 1);
    CHECK(enumerate_family(GraphClass::sunshine, 1).empty());
    CHECK(enumerate_family(GraphClass::sunshine, 2).empty());

    // known caterpillar counts
    std::vector<std::size_t> cat_counts = {1, 1, 1, 2, 3, 6, 10, 20, 36};
    for (int n = 1; n <= 9; ++n)
        CHECK(enumerate_family(GraphClass::caterpillar, n).size() == cat_counts[n - 1]);

    // duplicate-free and complete against generate-and-filter oracles
    for (int n = 3; n <= 8; ++n) {
        auto cats = enumerate_family(GraphClass::caterpillar, n);
        std::set<CanonicalForm> forms;
        for (const auto& g : cats) {
            CHECK(recognize(g).kind == GraphClass::caterpillar);
            CHECK(forms.insert(canonical_form(g)).second);
        }
        std::size_t expect = 0;
        for (const auto& t : oracle::all_trees_up_to_iso(n))
            if (recognize(t).kind == GraphClass::caterpillar) ++expect;
        CHECK(cats.size() == expect);

        auto suns = enumerate_family(GraphClass::sunshine, n);
        std::set<CanonicalForm> sforms;
        for (const auto& g : suns) {
            CHECK(recognize(g).kind == GraphClass::sunshine);
            CHECK(sforms.insert(canonical_form(g)).second);
        }
        std::size_t sexpect = 0;
        for (const auto& u : oracle::all_unicyclic_up_to_iso(n))
            if (recognize(u).kind == GraphClass::sunshine) ++sexpect;
        CHECK(suns.size() == sexpect);
    }
}

TEST_CASE("closed forms for the six structures") {
    CHECK(expected_common_cards(StructureKind::S0a, 17) == 8);
    CHECK(expected_common_cards(StructureKind::S0b, 20) == 7);
    CHECK(expected_common_cards(StructureKind::S1a, 15) == 5);
    CHECK(expected_common_cards(StructureKind::S1b, 19) == 8);
    CHECK(expected_common_cards(StructureKind::S2a, 14) == 3);
    CHECK(expected_common_cards(StructureKind::S2b, 20) == 6);
}
