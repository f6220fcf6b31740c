// Supercard construction from common-card witnesses, normalization to the
// sunshine labeling, the rebase construction, and chi-maximizing selection.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "suncat/deck.hpp"
#include "suncat/families.hpp"
#include "suncat/saturating.hpp"

namespace suncat {

// The order-(n+1) graph G* with G* - w = G exactly (w gets id n) and
// G* - v ≅ H; both are asserted.
Graph construct_supercard(const Graph& g, const Graph& h, const Witness& wit);

enum class SupercardStatus { ok, hypothesis_not_met, unsupported_regime };

struct SunshineSupercardResult {
    SupercardStatus status = SupercardStatus::ok;
    std::optional<SunshineSupercard> supercard;
    std::vector<Witness> all_witnesses;  // carried back on hypothesis_not_met too
};

// Builds a sunshine supercard of the pair from the first witness whose deleted
// H-vertex is a d-leaf of T, relabeled to the distinguished convention.
SunshineSupercardResult sunshine_supercard(const Graph& u, const Graph& t);

// Normalize an explicit supercard (graph, v, w) to the sunshine convention.
SunshineSupercard normalize_sunshine_supercard(const Graph& gplus, int v, int w);

struct RebaseContext {
    int eta = 0;   // cycle index of the pulled-back anchor of sigma(w)
    int xi = 0;    // cycle index of sigma^{-1}(x_nu)
    int zeta = 0;  // index of x_xi in the new labeling
    Permutation theta;
    bool reversed = false;
};

// Move the supercard's extra leaf w from x_0 to x_eta and relabel; the result
// is again a supercard of the same pair.
std::pair<SunshineSupercard, RebaseContext> rebase_supercard(const SunshineSupercard& sc,
                                                             const SaturatingElement& sigma);

struct BestSupercard {
    SupercardStatus status = SupercardStatus::ok;
    std::optional<SunshineSupercard> supercard;
    std::size_t chi = 0;
    std::size_t considered = 0;  // distinct sunshine supercards reached from witnesses
};

// Enumerates the witness-reachable sunshine supercards (deduplicated by the
// canonical form of the graph with v and w marked) and returns one with the
// largest chi; ties broken by least canonical form.
BestSupercard best_supercard(const Graph& u, const Graph& t);

}  // namespace suncat
