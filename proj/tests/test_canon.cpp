#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "suncat/canon.hpp"

using namespace suncat;

namespace {

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace

TEST_CASE("canonical form is label-invariant") {
    oracle::Rng rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracle::random_graph(rng.range(1, 10), rng);
        auto p = oracle::random_permutation(g.n, rng);
        CHECK(canonical_form(g) == canonical_form(apply_permutation(g, p)));
    }
}

TEST_CASE("distinct graphs get distinct forms") {
    CHECK(canonical_form(Graph::from_edges(3, {{0, 1}, {1, 2}})) !=
          canonical_form(Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})));
    // all 11 isomorphism classes on 4 vertices
    auto classes = oracle::all_graphs_up_to_iso(4);
    CHECK(classes.size() == 11);
    std::set<CanonicalForm> forms;
    for (const auto& g : classes) forms.insert(canonical_form(g));
    CHECK(forms.size() == 11);
}

TEST_CASE("canonical form agrees with brute force on small graphs") {
    auto c4 = oracle::all_graphs_up_to_iso(4);
    auto c5 = oracle::all_graphs_up_to_iso(5);
    CHECK(c5.size() == 34);
    for (const auto& list : {c4, c5})
        for (std::size_t i = 0; i < list.size(); ++i)
            for (std::size_t j = i; j < list.size(); ++j) {
                bool canon_eq = canonical_form(list[i]) == canonical_form(list[j]);
                CHECK(canon_eq == oracle::brute_force_isomorphic(list[i], list[j]));
            }
}

TEST_CASE("hex round trip") {
    auto f = canonical_form(cycle(5));
    CHECK(CanonicalForm::from_hex(f.hex()) == f);
}

TEST_CASE("find_isomorphism returns verified witnesses") {
    auto same = find_isomorphism(cycle(5), cycle(5));
    REQUIRE(same.has_value());
    CHECK(is_isomorphism(cycle(5), cycle(5), *same));

    CHECK(!find_isomorphism(cycle(6), path(6)).has_value());

    oracle::Rng rng(9);
    Graph cat = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 7}});
    for (int trial = 0; trial < 10; ++trial) {
        auto p = oracle::random_permutation(8, rng);
        Graph h = apply_permutation(cat, p);
        auto iso = find_isomorphism(cat, h);
        REQUIRE(iso.has_value());
        CHECK(is_isomorphism(cat, h, *iso));
    }
}

TEST_CASE("pinned isomorphism search") {
    Graph g = path(4);
    auto iso = find_isomorphism_pinned(g, g, 0, 3);
    REQUIRE(iso.has_value());
    CHECK((*iso)(0) == 3);
    CHECK(is_isomorphism(g, g, *iso));
    CHECK(!find_isomorphism_pinned(g, g, 0, 1).has_value());  // an end cannot map inside
}

TEST_CASE("automorphism groups") {
    auto d6 = automorphism_group(cycle(6));
    CHECK(d6.size() == 12);
    auto swap2 = automorphism_group(path(3));
    CHECK(swap2.size() == 2);

    // an asymmetric 7-vertex tree
    Graph rigid = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {5, 6}});
    // brute force: count identity only
    int count = 0;
    for (const auto& p : automorphism_group(rigid)) {
        CHECK(is_isomorphism(rigid, rigid, p));
        ++count;
    }
    CHECK(count == 1);

    // group axioms on C6: identity, closure, inverses
    std::set<std::vector<int>> elems;
    for (const auto& p : d6) elems.insert(p.map);
    CHECK(elems.count(Permutation::identity(6).map) == 1);
    for (const auto& p : d6) {
        CHECK(elems.count(p.inverse().map) == 1);
        for (const auto& q : d6) CHECK(elems.count(p.compose(q).map) == 1);
    }

    CHECK_THROWS_AS(automorphism_group(Graph(30)), ResourceError);
    AutGroupOptions tight;
    tight.max_elements = 5;
    CHECK_THROWS_AS(automorphism_group(cycle(6), tight), ResourceError);
}

TEST_CASE("neighbourhood extension criterion") {
    Graph c6 = cycle(6);
    CHECK(check_neighborhood_extension(c6, c6, 0, Permutation::identity(6)));
    Permutation rot;
    rot.map = {1, 2, 3, 4, 5, 0};
    CHECK(check_neighborhood_extension(c6, c6, 0, rot));

    // C6 + leaf: the card at the leaf maps correctly, but the neighbourhood
    // clause fails, so the criterion rejects the bijection
    Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}});
    Permutation gamma;
    gamma.map = {1, 2, 3, 4, 5, 0, 6};  // rotates the cycle, fixes the leaf
    CHECK(!check_neighborhood_extension(g, g, 6, gamma));
    CHECK(!is_isomorphism(g, g, gamma));

    CHECK_THROWS_AS(check_neighborhood_extension(c6, cycle(5), 0, Permutation::identity(6)),
                    std::invalid_argument);
}

TEST_CASE("automorphism criterion replay") {
    // gamma in Aut(G) iff gamma(G-v) = G-gamma(v) and gamma(N(v)) = N(gamma(v))
    oracle::Rng rng(77);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = oracle::random_graph(rng.range(4, 7), rng);
        auto auts = automorphism_group(g);
        std::set<std::vector<int>> autset;
        for (const auto& p : auts) autset.insert(p.map);
        for (const auto& p : auts)
            for (int v = 0; v < g.n; ++v) CHECK(check_neighborhood_extension(g, g, v, p));
        for (int k = 0; k < 8; ++k) {
            auto p = oracle::random_permutation(g.n, rng);
            if (autset.count(p.map)) continue;
            bool all = true;
            for (int v = 0; v < g.n && all; ++v)
                if (!check_neighborhood_extension(g, g, v, p)) all = false;
            CHECK(!all);
        }
    }
}

TEST_CASE("colored canonical form separates designations") {
    Graph g = path(4);
    std::vector<int> col_end = {1, 0, 0, 0};
    std::vector<int> col_mid = {0, 1, 0, 0};
    std::vector<int> col_other_end = {0, 0, 0, 1};
    CHECK(canonical_form_colored(g, col_end) == canonical_form_colored(g, col_other_end));
    CHECK(canonical_form_colored(g, col_end) != canonical_form_colored(g, col_mid));
}
