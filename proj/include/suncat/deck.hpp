// Decks, common-card counts b(G,H), and explicit common-card witnesses.
#pragma once

#include <vector>

#include "suncat/canon.hpp"
#include "suncat/graph.hpp"

namespace suncat {

struct Deck {
    std::vector<CanonicalForm> cards;  // sorted, one per vertex
};

Deck deck(const Graph& g);

struct CommonCards {
    std::size_t value = 0;
    bool order_mismatch = false;  // |V(G)| != |V(H)|: value is 0 by convention
};

// b(G,H) = |D(G) ∩ D(H)| as multisets.
CommonCards common_cards(const Graph& g, const Graph& h);
CommonCards common_cards(const Deck& dg, const Deck& dh, bool order_mismatch = false);

// A verified common-card triple: G - v ≅ H - t via iso, where iso maps
// original G ids to original H ids and iso[v] == -1.
struct Witness {
    int v;
    int t;
    std::vector<int> iso;
};

bool witness_is_valid(const Graph& g, const Graph& h, const Witness& w);

// One witness for every ordered pair (v, t) with G - v ≅ H - t; the stored
// isomorphism is the lexicographically least by image sequence.
std::vector<Witness> witnesses(const Graph& g, const Graph& h);

}  // namespace suncat
