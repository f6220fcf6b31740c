// Canonical labeling by iterated partition refinement with backtracking,
// isomorphism search with verified witnesses, and explicit automorphism groups.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "suncat/graph.hpp"

namespace suncat {

class ResourceError : public std::runtime_error {
public:
    ResourceError(const std::string& what, std::size_t cap)
        : std::runtime_error(what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

// Totally ordered fingerprint of an unlabeled graph; equal forms <=> isomorphic
// graphs. Layout (stable within a major version): two big-endian bytes holding
// n, then the upper triangle of the canonical adjacency matrix packed row-major,
// most significant bit first.
struct CanonicalForm {
    std::vector<std::uint8_t> bytes;

    auto operator<=>(const CanonicalForm&) const = default;
    std::string hex() const;
    static CanonicalForm from_hex(const std::string& s);
};

struct Permutation {
    std::vector<int> map;  // map[i] = image of vertex i

    static Permutation identity(int n);
    Permutation inverse() const;
    Permutation compose(const Permutation& first) const;  // (*this)∘first: v -> this[first[v]]
    int size() const { return static_cast<int>(map.size()); }
    int operator()(int v) const { return map[v]; }
    bool is_identity() const;
    bool is_valid() const;
    bool operator==(const Permutation&) const = default;
};

Graph apply_permutation(const Graph& g, const Permutation& p);

inline constexpr int kCanonMaxVertices = 64;

CanonicalForm canonical_form(const Graph& g);

// Canonical form of a vertex-colored graph: permutations must preserve colors.
// Used to deduplicate supercards carrying designated vertices.
CanonicalForm canonical_form_colored(const Graph& g, const std::vector<int>& colors);

// Lexicographically least isomorphism by image sequence, or nullopt.
std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h);

// Same, with the image of vertex `a` pinned to `b`.
std::optional<Permutation> find_isomorphism_pinned(const Graph& g, const Graph& h, int a, int b);

struct AutGroupOptions {
    int max_vertices = 20;
    std::size_t max_elements = 1'000'000;
};

std::vector<Permutation> automorphism_group(const Graph& g, const AutGroupOptions& opt = {});

// Both hypotheses of the card-plus-neighbourhood criterion: gamma maps G-v onto
// H-gamma(v) and N_G(v) onto N_H(gamma(v)). When true, gamma(G) = H.
bool check_neighborhood_extension(const Graph& g, const Graph& h, int v, const Permutation& gamma);

bool is_isomorphism(const Graph& g, const Graph& h, const Permutation& gamma);

}  // namespace suncat
