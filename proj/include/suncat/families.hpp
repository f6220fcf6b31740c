// Generators for sunshine graphs, caterpillars, and the six extremal
// supercard structures, plus exhaustive per-order enumeration.
#pragma once

#include <string>
#include <vector>

#include "suncat/canon.hpp"
#include "suncat/graph.hpp"

namespace suncat {

struct SunshineSpec {
    int c = 0;
    std::vector<int> leaf_counts;  // length c, leaves at cycle vertex i
};

struct CaterpillarSpec {
    int spine = 0;
    std::vector<int> leaf_counts;  // length spine
};

enum class StructureKind { S0a, S0b, S1a, S1b, S2a, S2b };

const char* structure_kind_name(StructureKind k);
StructureKind structure_kind_from_name(const std::string& s);

struct StructureSpec {
    StructureKind kind;
    int n;                 // order of U and T; the supercard has order n+1
    int nu_variant = 0;    // S2b only: 0 selects nu ≡ 2 (mod 5), 3 selects nu ≡ 3
};

// A sunshine supercard with the distinguished labeling: cycle x_0..x_{c-1}
// given by cycle_order (vertex ids), deleted vertex v = x_nu of degree 2, and
// leaf w adjacent to x_0, with d(x_{nu-1}) >= d(x_{nu+1}).
struct SunshineSupercard {
    Graph graph;
    int c = 0;
    std::vector<int> cycle_order;
    int nu = 0;
    int w = 0;

    int cycle_vertex(int k) const { return cycle_order[((k % c) + c) % c]; }
    int cycle_index_of(int vid) const;  // -1 if not on the cycle
    int v() const { return cycle_order[nu]; }
    // Leaves adjacent to x_i, ordered by id except that w comes first at x_0;
    // position j-1 in the list is the leaf labeled x_i^j.
    std::vector<int> leaves_at(int i) const;
    std::vector<int> leaf_count_vector() const;
    void validate() const;
};

Graph gen_sunshine(const SunshineSpec& spec);
Graph gen_caterpillar(const CaterpillarSpec& spec);

struct StructureInstance {
    SunshineSupercard supercard;
    Graph u;
    Graph t;
};

StructureInstance gen_structure(const StructureSpec& spec);

// Structure constants: congruence n ≡ n_res (mod n_mod), cycle degree pattern
// with its period, c = c_num (n+1) / c_den, nu ≡ nu_res (mod nu_mod), and the
// common-card count b = b_num (n+1) / b_den + b_add (valid for n >= 14).
struct StructureInfo {
    int n_mod, n_res;
    std::vector<int> pattern;
    int c_num, c_den;
    int nu_mod, nu_res;
    int b_num, b_den, b_add;
};

const StructureInfo& structure_info(StructureKind k);
long expected_common_cards(StructureKind k, int n);
int min_order(StructureKind k);  // least valid n with c >= 6

inline constexpr std::size_t kEnumerationCap = 2'000'000;

// One representative per isomorphism class, deduplicated by canonical form.
// kind must be sunshine or caterpillar.
std::vector<Graph> enumerate_family(GraphClass kind, int n, std::size_t cap = kEnumerationCap);

}  // namespace suncat
