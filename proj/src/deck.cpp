#include "suncat/deck.hpp"

#include <algorithm>
#include <map>

namespace suncat {

Deck deck(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("deck of the empty graph");
    Deck d;
    d.cards.reserve(g.n);
    for (int v = 0; v < g.n; ++v) d.cards.push_back(canonical_form(delete_vertices(g, {v}).graph));
    std::sort(d.cards.begin(), d.cards.end());
    return d;
}

CommonCards common_cards(const Deck& dg, const Deck& dh, bool order_mismatch) {
    if (order_mismatch) return {0, true};
    // sorted merge
    std::size_t merged = 0;
    std::size_t i = 0, j = 0;
    while (i < dg.cards.size() && j < dh.cards.size()) {
        if (dg.cards[i] < dh.cards[j]) {
            ++i;
        } else if (dh.cards[j] < dg.cards[i]) {
            ++j;
        } else {
            ++merged;
            ++i;
            ++j;
        }
    }
    // counting-map route must agree
    std::map<CanonicalForm, long> counts;
    for (const auto& c : dg.cards) ++counts[c];
    std::size_t counted = 0;
    for (const auto& c : dh.cards) {
        auto it = counts.find(c);
        if (it != counts.end() && it->second > 0) {
            --it->second;
            ++counted;
        }
    }
    if (merged != counted) throw std::logic_error("multiset intersection routes disagree");
    return {merged, false};
}

CommonCards common_cards(const Graph& g, const Graph& h) {
    if (g.n != h.n) return {0, true};
    return common_cards(deck(g), deck(h));
}

bool witness_is_valid(const Graph& g, const Graph& h, const Witness& w) {
    if (g.n != h.n) return false;
    if (w.v < 0 || w.v >= g.n || w.t < 0 || w.t >= h.n) return false;
    if (static_cast<int>(w.iso.size()) != g.n || w.iso[w.v] != -1) return false;
    std::vector<char> used(h.n, 0);
    for (int x = 0; x < g.n; ++x) {
        if (x == w.v) continue;
        int y = w.iso[x];
        if (y < 0 || y >= h.n || y == w.t || used[y]) return false;
        used[y] = 1;
    }
    int eg = 0, eh = 0;
    for (auto [x, y] : g.edges()) {
        if (x == w.v || y == w.v) continue;
        ++eg;
        if (!h.has_edge(w.iso[x], w.iso[y])) return false;
    }
    for (auto [x, y] : h.edges())
        if (x != w.t && y != w.t) ++eh;
    return eg == eh;
}

std::vector<Witness> witnesses(const Graph& g, const Graph& h) {
    std::vector<Witness> out;
    if (g.n != h.n || g.n == 0) return out;
    std::vector<DeletionResult> gcards, hcards;
    std::vector<CanonicalForm> gforms, hforms;
    for (int v = 0; v < g.n; ++v) {
        gcards.push_back(delete_vertices(g, {v}));
        gforms.push_back(canonical_form(gcards.back().graph));
    }
    for (int t = 0; t < h.n; ++t) {
        hcards.push_back(delete_vertices(h, {t}));
        hforms.push_back(canonical_form(hcards.back().graph));
    }
    for (int v = 0; v < g.n; ++v)
        for (int t = 0; t < h.n; ++t) {
            if (gforms[v] != hforms[t]) continue;
            auto iso = find_isomorphism(gcards[v].graph, hcards[t].graph);
            if (!iso) throw std::logic_error("equal canonical forms but no isomorphism");
            Witness w;
            w.v = v;
            w.t = t;
            w.iso.assign(g.n, -1);
            // dense relabelling preserves relative order, so the lexicographically
            // least map on the cards is least on the original ids too
            for (int x = 0; x < gcards[v].graph.n; ++x)
                w.iso[gcards[v].new_to_old[x]] = hcards[t].new_to_old[(*iso)(x)];
            if (!witness_is_valid(g, h, w)) throw std::logic_error("witness failed verification");
            out.push_back(std::move(w));
        }
    return out;
}

}  // namespace suncat
