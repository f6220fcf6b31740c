#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "oracles.hpp"
#include "suncat/deck.hpp"
#include "suncat/families.hpp"

using namespace suncat;

namespace {

Graph k3() { return Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}); }
Graph p3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("decks of small graphs") {
    auto dk = deck(k3());
    CHECK(dk.cards.size() == 3);
    CHECK(dk.cards[0] == dk.cards[1]);
    CHECK(dk.cards[1] == dk.cards[2]);
    CHECK(dk.cards[0] == canonical_form(Graph::from_edges(2, {{0, 1}})));

    auto dp = deck(p3());
    CHECK(dp.cards.size() == 3);
    std::map<CanonicalForm, int> mult;
    for (const auto& c : dp.cards) ++mult[c];
    CHECK(mult[canonical_form(Graph::from_edges(2, {{0, 1}}))] == 2);
    CHECK(mult[canonical_form(Graph(2))] == 1);

    CHECK_THROWS_AS(deck(Graph(0)), std::invalid_argument);
}

TEST_CASE("only the d-leaf card of C6-plus-leaf is the pure cycle") {
    Graph s = gen_sunshine({6, {1, 0, 0, 0, 0, 0}});
    Graph c6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    auto form = canonical_form(c6);
    int hits = 0;
    for (int v = 0; v < s.n; ++v)
        if (canonical_form(delete_vertices(s, {v}).graph) == form) {
            ++hits;
            CHECK(is_d_leaf(s, v));
        }
    CHECK(hits == 1);
}

TEST_CASE("common card counts") {
    CHECK(common_cards(p3(), k3()).value == 2);
    oracle::Rng rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = oracle::random_graph(rng.range(1, 9), rng);
        auto self = common_cards(g, g);
        CHECK(self.value == static_cast<std::size_t>(g.n));
    }
    auto mismatch = common_cards(p3(), Graph(4));
    CHECK(mismatch.value == 0);
    CHECK(mismatch.order_mismatch);
    // symmetry
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = oracle::random_graph(6, rng);
        Graph h = oracle::random_graph(6, rng);
        CHECK(common_cards(g, h).value == common_cards(h, g).value);
    }
}

TEST_CASE("witness lists cover exactly the matching pairs") {
    auto ws = witnesses(p3(), k3());
    CHECK(ws.size() == 6);  // both ends of P3, any vertex of K3
    for (const auto& w : ws) {
        CHECK(witness_is_valid(p3(), k3(), w));
        CHECK(w.v != 1);
    }

    // diagonal pairs always present for (G, G)
    oracle::Rng rng(12);
    for (int trial = 0; trial < 6; ++trial) {
        Graph g = oracle::random_graph(rng.range(2, 7), rng);
        auto self = witnesses(g, g);
        for (int v = 0; v < g.n; ++v) {
            bool diag = false;
            for (const auto& w : self)
                if (w.v == v && w.t == v) diag = true;
            CHECK(diag);
        }
    }

    // brute-force cross-check of the (v, t) pair set on (C6, P6)
    Graph c6(6), p6(6);
    for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
    for (int i = 0; i < 5; ++i) p6.add_edge(i, i + 1);
    auto ws2 = witnesses(c6, p6);
    std::set<std::pair<int, int>> got;
    for (const auto& w : ws2) got.insert({w.v, w.t});
    std::set<std::pair<int, int>> expect;
    for (int v = 0; v < 6; ++v)
        for (int t = 0; t < 6; ++t) {
            auto cu = delete_vertices(c6, {v}).graph;
            auto ct = delete_vertices(p6, {t}).graph;
            if (oracle::brute_force_isomorphic(cu, ct)) expect.insert({v, t});
        }
    CHECK(got == expect);
}

TEST_CASE("witness isomorphisms are lexicographically least") {
    Graph g = k3();
    auto ws = witnesses(g, g);
    for (const auto& w : ws) {
        // image sequence must be the least among all witnesses for this (v, t)
        auto gv = delete_vertices(g, {w.v});
        auto gt = delete_vertices(g, {w.t});
        std::vector<std::vector<int>> all;
        std::vector<int> img(gv.graph.n, -1);
        std::vector<char> used(gv.graph.n, 0);
        std::function<void(int)> rec = [&](int v) {
            if (v == gv.graph.n) {
                all.push_back(img);
                return;
            }
            for (int cand = 0; cand < gv.graph.n; ++cand) {
                if (used[cand]) continue;
                bool ok = true;
                for (int u = 0; u < v && ok; ++u)
                    if (gv.graph.has_edge(u, v) != gt.graph.has_edge(img[u], cand)) ok = false;
                if (!ok) continue;
                img[v] = cand;
                used[cand] = 1;
                rec(v + 1);
                img[v] = -1;
                used[cand] = 0;
            }
        };
        rec(0);
        REQUIRE(!all.empty());
        std::vector<int> ours;
        for (int x = 0; x < g.n; ++x)
            if (x != w.v) ours.push_back(gt.old_to_new[w.iso[x]]);
        CHECK(ours == *std::min_element(all.begin(), all.end()));
    }
}

TEST_CASE("intersection value matches a brute-force multiset count") {
    oracle::Rng rng(21);
    for (int trial = 0; trial < 15; ++trial) {
        int n = rng.range(2, 7);
        Graph g = oracle::random_graph(n, rng);
        Graph h = oracle::random_graph(n, rng);
        // oracle: bipartite matching over brute-force isomorphic card pairs is
        // exactly the multiset intersection because blocks are complete
        std::vector<Graph> gc, hc;
        for (int v = 0; v < n; ++v) gc.push_back(delete_vertices(g, {v}).graph);
        for (int t = 0; t < n; ++t) hc.push_back(delete_vertices(h, {t}).graph);
        std::vector<char> taken(n, 0);
        std::size_t count = 0;
        for (int v = 0; v < n; ++v)
            for (int t = 0; t < n; ++t)
                if (!taken[t] && oracle::brute_force_isomorphic(gc[v], hc[t])) {
                    taken[t] = 1;
                    ++count;
                    break;
                }
        CHECK(common_cards(g, h).value == count);
    }
}
