#include "suncat/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace suncat {

const char* structure_kind_name(StructureKind k) {
    switch (k) {
        case StructureKind::S0a: return "S0a";
        case StructureKind::S0b: return "S0b";
        case StructureKind::S1a: return "S1a";
        case StructureKind::S1b: return "S1b";
        case StructureKind::S2a: return "S2a";
        case StructureKind::S2b: return "S2b";
    }
    return "?";
}

StructureKind structure_kind_from_name(const std::string& s) {
    for (StructureKind k : {StructureKind::S0a, StructureKind::S0b, StructureKind::S1a,
                            StructureKind::S1b, StructureKind::S2a, StructureKind::S2b})
        if (s == structure_kind_name(k)) return k;
    throw std::invalid_argument("unknown structure kind: " + s);
}

const StructureInfo& structure_info(StructureKind k) {
    static const std::map<StructureKind, StructureInfo> table = {
        {StructureKind::S0a, {3, 2, {3, 2}, 2, 3, 2, 1, 1, 3, 2}},
        {StructureKind::S0b, {7, 6, {4, 2, 3, 2}, 4, 7, 4, 1, 2, 7, 1}},
        {StructureKind::S1a, {4, 3, {3, 2, 2}, 3, 4, 3, 1, 1, 4, 1}},
        {StructureKind::S1b, {5, 4, {4, 2, 2}, 3, 5, 3, 1, 2, 5, 0}},
        {StructureKind::S2a, {5, 4, {3, 2, 2, 2}, 4, 5, 4, 2, 1, 5, 0}},
        {StructureKind::S2b, {7, 6, {4, 2, 2, 2, 2}, 5, 7, 5, 2, 2, 7, 0}},
    };
    return table.at(k);
}

long expected_common_cards(StructureKind k, int n) {
    const auto& info = structure_info(k);
    if ((n - info.n_res) % info.n_mod != 0) throw std::invalid_argument("congruence violated");
    long num = static_cast<long>(info.b_num) * (n + 1);
    if (num % info.b_den != 0) throw std::logic_error("non-integral closed form");
    return num / info.b_den + info.b_add;
}

int min_order(StructureKind k) {
    const auto& info = structure_info(k);
    for (int n = info.n_res;; n += info.n_mod) {
        long c = static_cast<long>(info.c_num) * (n + 1) / info.c_den;
        if (c >= 6) return n;
    }
}

int SunshineSupercard::cycle_index_of(int vid) const {
    for (int i = 0; i < c; ++i)
        if (cycle_order[i] == vid) return i;
    return -1;
}

std::vector<int> SunshineSupercard::leaves_at(int i) const {
    int anchor = cycle_vertex(i);
    std::vector<int> out;
    for (int u : graph.adj[anchor])
        if (graph.degree(u) == 1) out.push_back(u);
    if (((i % c) + c) % c == 0) {
        auto it = std::find(out.begin(), out.end(), w);
        if (it != out.end()) {
            out.erase(it);
            out.insert(out.begin(), w);
        }
    }
    return out;
}

std::vector<int> SunshineSupercard::leaf_count_vector() const {
    std::vector<int> counts(c);
    for (int i = 0; i < c; ++i) counts[i] = graph.degree(cycle_order[i]) - 2;
    return counts;
}

void SunshineSupercard::validate() const {
    if (c < 3 || static_cast<int>(cycle_order.size()) != c)
        throw std::invalid_argument("supercard: bad cycle");
    if (recognize(graph).kind != GraphClass::sunshine)
        throw std::invalid_argument("supercard: graph is not a sunshine graph");
    for (int i = 0; i < c; ++i)
        if (!graph.has_edge(cycle_order[i], cycle_order[(i + 1) % c]))
            throw std::invalid_argument("supercard: cycle_order is not the cycle");
    if (nu <= 0 || nu >= c || graph.degree(cycle_order[nu]) != 2)
        throw std::invalid_argument("supercard: x_nu must be a degree-2 cycle vertex");
    if (graph.degree(w) != 1 || !graph.has_edge(w, cycle_order[0]))
        throw std::invalid_argument("supercard: w must be a leaf at x_0");
    if (graph.degree(cycle_vertex(nu - 1)) < graph.degree(cycle_vertex(nu + 1)))
        throw std::invalid_argument("supercard: labeling must satisfy d(x_{nu-1}) >= d(x_{nu+1})");
}

Graph gen_sunshine(const SunshineSpec& spec) {
    if (spec.c < 3) throw std::invalid_argument("sunshine cycle length must be >= 3");
    if (static_cast<int>(spec.leaf_counts.size()) != spec.c)
        throw std::invalid_argument("leaf_counts length must equal c");
    for (int k : spec.leaf_counts)
        if (k < 0) throw std::invalid_argument("negative leaf count");
    int n = spec.c;
    for (int k : spec.leaf_counts) n += k;
    Graph g(n);
    for (int i = 0; i < spec.c; ++i) g.add_edge(i, (i + 1) % spec.c);
    int next = spec.c;
    for (int i = 0; i < spec.c; ++i)
        for (int j = 0; j < spec.leaf_counts[i]; ++j) g.add_edge(i, next++);
    return g;
}

Graph gen_caterpillar(const CaterpillarSpec& spec) {
    if (spec.spine < 1) throw std::invalid_argument("spine length must be >= 1");
    if (static_cast<int>(spec.leaf_counts.size()) != spec.spine)
        throw std::invalid_argument("leaf_counts length must equal spine length");
    for (int k : spec.leaf_counts)
        if (k < 0) throw std::invalid_argument("negative leaf count");
    if (spec.spine >= 2) {
        // spine ends of degree 1 would be pruned from the skeleton
        if (spec.leaf_counts.front() == 0)
            throw std::invalid_argument("spine end y_1 needs a leaf to stay in the skeleton");
        if (spec.leaf_counts.back() == 0)
            throw std::invalid_argument("spine end y_p needs a leaf to stay in the skeleton");
    } else if (spec.leaf_counts[0] < 2) {
        throw std::invalid_argument("single spine vertex needs >= 2 leaves");
    }
    int n = spec.spine;
    for (int k : spec.leaf_counts) n += k;
    Graph g(n);
    for (int i = 0; i + 1 < spec.spine; ++i) g.add_edge(i, i + 1);
    int next = spec.spine;
    for (int i = 0; i < spec.spine; ++i)
        for (int j = 0; j < spec.leaf_counts[i]; ++j) g.add_edge(i, next++);
    return g;
}

StructureInstance gen_structure(const StructureSpec& spec) {
    const auto& info = structure_info(spec.kind);
    if ((spec.n - info.n_res) % info.n_mod != 0)
        throw std::invalid_argument(std::string("structure ") + structure_kind_name(spec.kind) +
                                    " requires n == " + std::to_string(info.n_res) + " (mod " +
                                    std::to_string(info.n_mod) + ")");
    if (spec.nu_variant != 0 && (spec.kind != StructureKind::S2b || spec.nu_variant != 3))
        throw std::invalid_argument("nu_variant 3 is only available for S2b");
    long cl = static_cast<long>(info.c_num) * (spec.n + 1) / info.c_den;
    int c = static_cast<int>(cl);
    if (c < 6) throw std::invalid_argument("n too small: the structure needs a cycle of length >= 6");
    int period = static_cast<int>(info.pattern.size());
    SunshineSpec sun;
    sun.c = c;
    sun.leaf_counts.resize(c);
    for (int i = 0; i < c; ++i) sun.leaf_counts[i] = info.pattern[i % period] - 2;
    StructureInstance inst;
    inst.supercard.graph = gen_sunshine(sun);
    inst.supercard.c = c;
    inst.supercard.cycle_order.resize(c);
    for (int i = 0; i < c; ++i) inst.supercard.cycle_order[i] = i;
    inst.supercard.nu = spec.nu_variant == 3 ? 3 : info.nu_res;
    inst.supercard.w = c;  // first leaf of x_0
    inst.supercard.validate();
    if (inst.supercard.graph.n != spec.n + 1) throw std::logic_error("structure order mismatch");
    inst.u = delete_vertices(inst.supercard.graph, {inst.supercard.w}).graph;
    inst.t = delete_vertices(inst.supercard.graph, {inst.supercard.v()}).graph;
    return inst;
}

namespace {

std::vector<int> dihedral_least(const std::vector<int>& v) {
    int c = static_cast<int>(v.size());
    std::vector<int> best = v;
    for (int rev = 0; rev < 2; ++rev) {
        std::vector<int> cur = v;
        if (rev) std::reverse(cur.begin(), cur.end());
        for (int r = 0; r < c; ++r) {
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (cur < best) best = cur;
        }
    }
    return best;
}

// compositions of total into k parts
void compositions(int total, int k, std::vector<int>& cur, const std::function<void()>& emit) {
    if (k == 1) {
        cur.push_back(total);
        emit();
        cur.pop_back();
        return;
    }
    for (int first = 0; first <= total; ++first) {
        cur.push_back(first);
        compositions(total - first, k - 1, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Graph> enumerate_family(GraphClass kind, int n, std::size_t cap) {
    if (n < 1) throw std::invalid_argument("order must be >= 1");
    std::vector<Graph> out;
    std::set<CanonicalForm> seen;
    auto push = [&](const Graph& g) {
        if (out.size() >= cap) throw ResourceError("enumeration cap exceeded", cap);
        if (seen.insert(canonical_form(g)).second) out.push_back(g);
    };
    if (kind == GraphClass::caterpillar) {
        if (n == 1) {
            push(Graph(1));
            return out;
        }
        if (n == 2) {
            push(Graph::from_edges(2, {{0, 1}}));
            return out;
        }
        for (int p = 1; p < n; ++p) {
            int free_leaves = n - p;
            if (p == 1) {
                if (free_leaves >= 2)
                    push(gen_caterpillar({1, {free_leaves}}));
                continue;
            }
            if (free_leaves < 2) continue;
            std::set<std::vector<int>> specs;
            std::vector<int> cur;
            compositions(free_leaves - 2, p, cur, [&] {
                std::vector<int> counts = cur;
                counts.front() += 1;
                counts.back() += 1;
                std::vector<int> rev(counts.rbegin(), counts.rend());
                specs.insert(std::min(counts, rev));
            });
            for (const auto& counts : specs) push(gen_caterpillar({p, counts}));
        }
    } else if (kind == GraphClass::sunshine) {
        for (int c = 3; c <= n; ++c) {
            std::set<std::vector<int>> necklaces;
            std::vector<int> cur;
            compositions(n - c, c, cur, [&] { necklaces.insert(dihedral_least(cur)); });
            for (const auto& counts : necklaces) push(gen_sunshine({c, counts}));
        }
    } else {
        throw std::invalid_argument("enumerate_family: kind must be sunshine or caterpillar");
    }
    return out;
}

}  // namespace suncat
