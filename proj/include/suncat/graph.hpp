// Core graph type and structural vocabulary: skeletons, diameters (longest-path
// convention), tau, d-leaves, sunshine/caterpillar recognition and card structure.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace suncat {

// Labeled simple undirected graph on vertex ids 0..n-1.
// Adjacency lists are kept sorted; no loops, no multi-edges.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int order) : n(order), adj(order) {
        if (order < 0) throw std::invalid_argument("negative graph order");
    }

    static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    int degree(int v) const { check_vertex(v); return static_cast<int>(adj[v].size()); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // each u < v, sorted

    void check_vertex(int v) const {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }

    bool operator==(const Graph& other) const { return n == other.n && adj == other.adj; }
};

// Result of vertex deletion: surviving vertices relabeled to a dense range.
// old_to_new[v] == -1 for deleted vertices.
struct DeletionResult {
    Graph graph;
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};

DeletionResult delete_vertices(const Graph& g, const std::vector<int>& zs);

// Single-pass removal of all leaves and isolated vertices (not iterated).
DeletionResult skeleton_with_map(const Graph& g);
Graph skeleton(const Graph& g);

// Longest-path length. Connected graphs: exact. A single tree plus isolated
// vertices: the tree's value. Other disconnected graphs: nullopt.
std::optional<int> diameter(const Graph& g);

// Longest simple path starting at v, within v's component.
int longest_path_from(const Graph& g, int v);

// Number of degree-2 neighbours of v.
int tau(const Graph& g, int v);

enum class VertexClass { isolated, leaf, d_leaf, peripheral_leaf, internal, cut_skeleton };

// For leaves the tag d_leaf takes precedence over peripheral_leaf.
// Non-leaf vertices split into cut vertices (cut_skeleton) and the rest (internal).
VertexClass classify_vertex(const Graph& g, int v);

const char* vertex_class_name(VertexClass c);

enum class GraphClass { sunshine, caterpillar, other };

struct Recognition {
    GraphClass kind;
    // Leafless sunshine (pure cycle), or caterpillar of order <= 2 whose
    // skeleton is empty. These fall outside the lemmas' usual regime.
    bool degenerate;
};

Recognition recognize(const Graph& g);
const char* graph_class_name(GraphClass c);

// Predicted structure of the card S - x_i of a sunshine graph S with cycle
// x_0..x_{c-1}: skeleton endpoints as cycle indices, caterpillar diameter,
// and the number of isolated vertices.
struct CardPrediction {
    int skeleton_start;
    int skeleton_end;
    int diameter;
    int isolated_count;
};

CardPrediction predict_sunshine_card(const Graph& s, const std::vector<int>& cycle, int i);

enum class CardClass { single_nontrivial_component, multi_component, trivial };

CardClass caterpillar_card_class(const Graph& t, int y);

// Leaves that are not d-leaves; at most two in any caterpillar.
int non_d_leaf_count(const Graph& t);

std::vector<std::vector<int>> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// d_k(G) for k = 0..n-1; entries sum to n.
std::vector<int> degree_histogram(const Graph& g);

// The unique cycle of a unicyclic graph, in traversal order starting from the
// smallest cycle vertex, second vertex the smaller of its two cycle neighbours.
std::vector<int> unique_cycle(const Graph& g);

bool is_d_leaf(const Graph& g, int v);
bool is_peripheral_leaf(const Graph& g, int v);

}  // namespace suncat
