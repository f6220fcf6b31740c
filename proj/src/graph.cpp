#include "suncat/graph.hpp"

#include <algorithm>
#include <numeric>

namespace suncat {

Graph Graph::from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge rejected");
    if (has_edge(u, v)) return;
    adj[u].insert(std::lower_bound(adj[u].begin(), adj[u].end(), v), v);
    adj[v].insert(std::lower_bound(adj[v].begin(), adj[v].end(), u), u);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

int Graph::edge_count() const {
    int twice = 0;
    for (const auto& nb : adj) twice += static_cast<int>(nb.size());
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

DeletionResult delete_vertices(const Graph& g, const std::vector<int>& zs) {
    std::vector<char> gone(g.n, 0);
    for (int z : zs) {
        g.check_vertex(z);
        gone[z] = 1;
    }
    DeletionResult res;
    res.old_to_new.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        if (gone[v]) continue;
        res.old_to_new[v] = static_cast<int>(res.new_to_old.size());
        res.new_to_old.push_back(v);
    }
    res.graph = Graph(static_cast<int>(res.new_to_old.size()));
    for (int v = 0; v < g.n; ++v) {
        if (gone[v]) continue;
        for (int u : g.adj[v])
            if (!gone[u] && v < u) res.graph.add_edge(res.old_to_new[v], res.old_to_new[u]);
    }
    return res;
}

DeletionResult skeleton_with_map(const Graph& g) {
    std::vector<int> zs;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) <= 1) zs.push_back(v);
    return delete_vertices(g, zs);
}

Graph skeleton(const Graph& g) { return skeleton_with_map(g).graph; }

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int u : g.adj[comp[i]])
                if (!seen[u]) {
                    seen[u] = 1;
                    comp.push_back(u);
                }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    return components(g).size() == 1;
}

bool is_tree(const Graph& g) { return is_connected(g) && g.edge_count() == g.n - 1; }

namespace {

// Farthest-vertex BFS; returns (vertex, distance) from src within its component.
std::pair<int, int> bfs_far(const Graph& g, int src) {
    std::vector<int> dist(g.n, -1);
    std::vector<int> queue{src};
    dist[src] = 0;
    int best = src;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        for (int u : g.adj[v])
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                if (dist[u] > dist[best]) best = u;
                queue.push_back(u);
            }
    }
    return {best, dist[best]};
}

int longest_path_dfs(const Graph& g, int v, std::vector<char>& used) {
    int best = 0;
    used[v] = 1;
    for (int u : g.adj[v])
        if (!used[u]) best = std::max(best, 1 + longest_path_dfs(g, u, used));
    used[v] = 0;
    return best;
}

// Exact longest path inside one component given by its vertex list.
int longest_path_in_component(const Graph& g, const std::vector<int>& comp) {
    int m = 0;
    for (int v : comp) m += static_cast<int>(g.adj[v].size());
    m /= 2;
    if (m == static_cast<int>(comp.size()) - 1) {
        // tree: double sweep
        auto [far1, d1] = bfs_far(g, comp[0]);
        (void)d1;
        return bfs_far(g, far1).second;
    }
    std::vector<char> used(g.n, 0);
    int best = 0;
    for (int v : comp) best = std::max(best, longest_path_dfs(g, v, used));
    return best;
}

}  // namespace

int longest_path_from(const Graph& g, int v) {
    g.check_vertex(v);
    std::vector<char> used(g.n, 0);
    return longest_path_dfs(g, v, used);
}

std::optional<int> diameter(const Graph& g) {
    if (g.n == 0) return std::nullopt;
    auto comps = components(g);
    std::vector<const std::vector<int>*> nontrivial;
    for (const auto& c : comps)
        if (c.size() >= 2) nontrivial.push_back(&c);
    if (nontrivial.empty()) return 0;  // isolated vertices only; the "tree" is a point
    if (nontrivial.size() > 1) return std::nullopt;
    const auto& comp = *nontrivial[0];
    if (comps.size() > 1) {
        // tree-plus-isolated convention only
        int m = 0;
        for (int v : comp) m += static_cast<int>(g.adj[v].size());
        if (m / 2 != static_cast<int>(comp.size()) - 1) return std::nullopt;
    }
    return longest_path_in_component(g, comp);
}

int tau(const Graph& g, int v) {
    g.check_vertex(v);
    int count = 0;
    for (int u : g.adj[v])
        if (g.degree(u) == 2) ++count;
    return count;
}

namespace {

std::size_t component_order(const Graph& g, int v) {
    std::vector<char> seen(g.n, 0);
    std::vector<int> queue{v};
    seen[v] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i)
        for (int u : g.adj[queue[i]])
            if (!seen[u]) {
                seen[u] = 1;
                queue.push_back(u);
            }
    return static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 1));
}

std::vector<char> cut_vertices(const Graph& g) {
    std::vector<char> cut(g.n, 0);
    std::vector<int> tin(g.n, -1), low(g.n, 0);
    int timer = 0;
    // iterative lowlink
    for (int root = 0; root < g.n; ++root) {
        if (tin[root] >= 0) continue;
        std::vector<std::tuple<int, int, std::size_t>> stack;  // (v, parent, next child idx)
        stack.emplace_back(root, -1, 0);
        tin[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            auto& [v, parent, idx] = stack.back();
            if (idx < g.adj[v].size()) {
                int u = g.adj[v][idx++];
                if (u == parent) continue;
                if (tin[u] >= 0) {
                    low[v] = std::min(low[v], tin[u]);
                } else {
                    tin[u] = low[u] = timer++;
                    if (v == root) ++root_children;
                    stack.emplace_back(u, v, 0);
                }
            } else {
                int vv = v, pp = parent;
                stack.pop_back();
                if (pp >= 0) {
                    low[pp] = std::min(low[pp], low[vv]);
                    if (pp != root && low[vv] >= tin[pp]) cut[pp] = 1;
                }
            }
        }
        if (root_children >= 2) cut[root] = 1;
    }
    return cut;
}

}  // namespace

bool is_d_leaf(const Graph& g, int v) {
    if (g.degree(v) != 1) return false;
    if (component_order(g, v) < 3) return false;
    return g.degree(g.adj[v][0]) >= 3;
}

bool is_peripheral_leaf(const Graph& g, int v) {
    if (g.degree(v) != 1) return false;
    int global = 0;
    for (const auto& comp : components(g))
        global = std::max(global, longest_path_in_component(g, comp));
    return longest_path_from(g, v) == global;
}

VertexClass classify_vertex(const Graph& g, int v) {
    g.check_vertex(v);
    int d = g.degree(v);
    if (d == 0) return VertexClass::isolated;
    if (d == 1) {
        if (is_d_leaf(g, v)) return VertexClass::d_leaf;
        // degenerate two-vertex components stay plain leaves
        if (component_order(g, v) >= 3 && is_peripheral_leaf(g, v)) return VertexClass::peripheral_leaf;
        return VertexClass::leaf;
    }
    return cut_vertices(g)[v] ? VertexClass::cut_skeleton : VertexClass::internal;
}

const char* vertex_class_name(VertexClass c) {
    switch (c) {
        case VertexClass::isolated: return "isolated";
        case VertexClass::leaf: return "leaf";
        case VertexClass::d_leaf: return "d_leaf";
        case VertexClass::peripheral_leaf: return "peripheral_leaf";
        case VertexClass::internal: return "internal";
        case VertexClass::cut_skeleton: return "cut_skeleton";
    }
    return "?";
}

namespace {

bool graph_is_cycle(const Graph& g) {
    if (g.n < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

bool graph_is_path(const Graph& g) {
    if (g.n == 0) return false;
    if (g.n == 1) return true;
    if (!is_connected(g)) return false;
    int ones = 0;
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        if (d > 2) return false;
        if (d == 1) ++ones;
    }
    return ones == 2;
}

}  // namespace

Recognition recognize(const Graph& g) {
    if (g.n == 0 || !is_connected(g)) return {GraphClass::other, false};
    Graph sk = skeleton(g);
    if (sk.n == 0) {
        // connected with every vertex a leaf or isolated: K1 or a single edge
        return {GraphClass::caterpillar, true};
    }
    if (graph_is_cycle(sk)) return {GraphClass::sunshine, sk.n == g.n};
    if (graph_is_path(sk)) return {GraphClass::caterpillar, false};
    return {GraphClass::other, false};
}

const char* graph_class_name(GraphClass c) {
    switch (c) {
        case GraphClass::sunshine: return "sunshine";
        case GraphClass::caterpillar: return "caterpillar";
        case GraphClass::other: return "other";
    }
    return "?";
}

CardPrediction predict_sunshine_card(const Graph& s, const std::vector<int>& cycle, int i) {
    if (recognize(s).kind != GraphClass::sunshine)
        throw std::invalid_argument("predict_sunshine_card: not a sunshine graph");
    int c = static_cast<int>(cycle.size());
    if (i < 0 || i >= c) throw std::invalid_argument("cycle index out of range");
    auto at = [&](int k) { return cycle[((k % c) + c) % c]; };
    int v = at(i);
    int dplus = s.degree(at(i + 1));
    int dminus = s.degree(at(i - 1));
    CardPrediction p;
    p.diameter = c - tau(s, v);
    p.isolated_count = s.degree(v) - 2;
    p.skeleton_start = ((dplus >= 3 ? i + 1 : i + 2) % c + c) % c;
    p.skeleton_end = ((dminus >= 3 ? i - 1 : i - 2) % c + c) % c;
    return p;
}

CardClass caterpillar_card_class(const Graph& t, int y) {
    t.check_vertex(y);
    auto card = delete_vertices(t, {y});
    int nontrivial = 0;
    for (const auto& comp : components(card.graph))
        if (comp.size() >= 2) ++nontrivial;
    if (nontrivial == 0) return CardClass::trivial;
    if (nontrivial == 1) return CardClass::single_nontrivial_component;
    return CardClass::multi_component;
}

int non_d_leaf_count(const Graph& t) {
    int count = 0;
    for (int v = 0; v < t.n; ++v)
        if (t.degree(v) == 1 && !is_d_leaf(t, v)) ++count;
    return count;
}

std::vector<int> degree_histogram(const Graph& g) {
    std::vector<int> h(std::max(g.n, 1), 0);
    for (int v = 0; v < g.n; ++v) ++h[g.degree(v)];
    return h;
}

std::vector<int> unique_cycle(const Graph& g) {
    if (g.edge_count() != g.n || !is_connected(g))
        throw std::invalid_argument("unique_cycle: graph is not connected unicyclic");
    // peel leaves repeatedly; what survives is the cycle
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::vector<int> stack;
    for (int v = 0; v < g.n; ++v)
        if (deg[v] == 1) stack.push_back(v);
    std::vector<char> removed(g.n, 0);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        removed[v] = 1;
        for (int u : g.adj[v])
            if (!removed[u] && --deg[u] == 1) stack.push_back(u);
    }
    int start = -1;
    for (int v = 0; v < g.n && start < 0; ++v)
        if (!removed[v]) start = v;
    std::vector<int> cycle{start};
    int prev = -1, cur = start;
    do {
        int next = -1;
        for (int u : g.adj[cur])
            if (!removed[u] && u != prev && (next < 0 || u < next)) next = u;
        // after the first step any direction is forced except back where we came
        prev = cur;
        cur = next;
        if (cur != start) cycle.push_back(cur);
    } while (cur != start);
    return cycle;
}

}  // namespace suncat
