// Test-only oracles, kept independent of the library's canonical-labeling path:
// brute-force isomorphism by permutation search, and generate-and-filter
// enumeration of trees and unicyclic graphs.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "suncat/canon.hpp"
#include "suncat/graph.hpp"

namespace oracle {

inline bool extend_brute(const suncat::Graph& g, const suncat::Graph& h, std::vector<int>& img,
                         std::vector<char>& used, int v) {
    if (v == g.n) return true;
    for (int cand = 0; cand < g.n; ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.has_edge(u, v) != h.has_edge(img[u], cand)) ok = false;
        if (!ok) continue;
        img[v] = cand;
        used[cand] = 1;
        if (extend_brute(g, h, img, used, v + 1)) return true;
        img[v] = -1;
        used[cand] = 0;
    }
    return false;
}

// Exhaustive permutation search (with partial-assignment backtracking).
inline bool brute_force_isomorphic(const suncat::Graph& g, const suncat::Graph& h) {
    if (g.n != h.n || g.edge_count() != h.edge_count()) return false;
    auto dg = suncat::degree_histogram(g);
    auto dh = suncat::degree_histogram(h);
    dg.resize(std::max(dg.size(), dh.size()), 0);
    dh.resize(dg.size(), 0);
    if (dg != dh) return false;
    std::vector<int> img(g.n, -1);
    std::vector<char> used(g.n, 0);
    return extend_brute(g, h, img, used, 0);
}

// All labeled graphs on n vertices via edge bitmasks, reduced to one
// representative per isomorphism class.
inline std::vector<suncat::Graph> all_graphs_up_to_iso(int n) {
    int pairs = n * (n - 1) / 2;
    std::set<suncat::CanonicalForm> seen;
    std::vector<suncat::Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        suncat::Graph g(n);
        int bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (mask >> bit & 1) g.add_edge(i, j);
        if (seen.insert(suncat::canonical_form(g)).second) out.push_back(g);
    }
    return out;
}

// All trees on n >= 1 labeled vertices via Pruefer sequences, up to isomorphism.
inline std::vector<suncat::Graph> all_trees_up_to_iso(int n) {
    std::vector<suncat::Graph> out;
    std::set<suncat::CanonicalForm> seen;
    auto push = [&](const suncat::Graph& g) {
        if (seen.insert(suncat::canonical_form(g)).second) out.push_back(g);
    };
    if (n == 1) {
        push(suncat::Graph(1));
        return out;
    }
    if (n == 2) {
        push(suncat::Graph::from_edges(2, {{0, 1}}));
        return out;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        std::vector<int> degree(n, 1);
        for (int x : seq) ++degree[x];
        suncat::Graph g(n);
        std::vector<int> deg = degree;
        std::vector<char> done(n, 0);
        for (int x : seq) {
            int leaf = -1;
            for (int v = 0; v < n && leaf < 0; ++v)
                if (!done[v] && deg[v] == 1) leaf = v;
            g.add_edge(leaf, x);
            done[leaf] = 1;
            --deg[x];
        }
        int u = -1, v = -1;
        for (int x = 0; x < n; ++x)
            if (!done[x]) (u < 0 ? u : v) = x;
        g.add_edge(u, v);
        push(g);
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return out;
}

// Every unicyclic graph is a tree plus one edge.
inline std::vector<suncat::Graph> all_unicyclic_up_to_iso(int n) {
    std::vector<suncat::Graph> out;
    std::set<suncat::CanonicalForm> seen;
    for (const auto& t : all_trees_up_to_iso(n))
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (t.has_edge(u, v)) continue;
                suncat::Graph g = t;
                g.add_edge(u, v);
                if (seen.insert(suncat::canonical_form(g)).second) out.push_back(g);
            }
    return out;
}

// Deterministic RNG helpers (avoid implementation-defined distributions).
struct Rng {
    std::mt19937_64 engine;
    explicit Rng(std::uint64_t seed) : engine(seed) {}
    // uniform in [0, bound)
    std::uint64_t next(std::uint64_t bound) { return engine() % bound; }
    int range(int lo, int hi) { return lo + static_cast<int>(next(static_cast<std::uint64_t>(hi - lo + 1))); }
};

inline suncat::Permutation random_permutation(int n, Rng& rng) {
    suncat::Permutation p = suncat::Permutation::identity(n);
    for (int i = n - 1; i > 0; --i) std::swap(p.map[i], p.map[rng.range(0, i)]);
    return p;
}

inline suncat::Graph random_graph(int n, Rng& rng) {
    suncat::Graph g(n);
    int density = rng.range(1, 9);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.range(0, 9) < density) g.add_edge(i, j);
    return g;
}

}  // namespace oracle
