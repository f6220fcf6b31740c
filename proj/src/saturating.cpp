#include "suncat/saturating.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace suncat {

const char* w_image_class_name(WImageClass c) {
    switch (c) {
        case WImageClass::unknown: return "unknown";
        case WImageClass::d_leaf: return "d_leaf";
        case WImageClass::peripheral_non_d_leaf: return "peripheral_non_d_leaf";
        case WImageClass::adjacent_to_peripheral: return "adjacent_to_peripheral";
    }
    return "?";
}

const char* group_kind_name(GroupKindTag t) {
    switch (t) {
        case GroupKindTag::cyclic: return "cyclic";
        case GroupKindTag::dihedral: return "dihedral";
        case GroupKindTag::not_a_group: return "not_a_group";
        case GroupKindTag::other_group: return "other_group";
    }
    return "?";
}

bool card_equation_holds(const Graph& gplus, int v, int w, const Permutation& lambda) {
    if (lambda.size() != gplus.n || !lambda.is_valid()) return false;
    int a = lambda.inverse()(v);
    int b = lambda(w);
    if (a == w || b == v) return false;
    int src_edges = 0, dst_edges = 0;
    for (auto [x, y] : gplus.edges()) {
        if (x != w && y != w && x != a && y != a) {
            ++src_edges;
            int lx = lambda(x), ly = lambda(y);
            if (lx == v || ly == v || lx == b || ly == b) return false;
            if (!gplus.has_edge(lx, ly)) return false;
        }
        if (x != v && y != v && x != b && y != b) ++dst_edges;
    }
    return src_edges == dst_edges;
}

bool bg_membership_holds(const Graph& gplus, int w, const Permutation& lambda) {
    if (lambda.size() != gplus.n || !lambda.is_valid()) return false;
    int b = lambda(w);
    int src_edges = 0, dst_edges = 0;
    for (auto [x, y] : gplus.edges()) {
        if (x != w && y != w) {
            ++src_edges;
            int lx = lambda(x), ly = lambda(y);
            if (lx == b || ly == b) return false;
            if (!gplus.has_edge(lx, ly)) return false;
        }
        if (x != b && y != b) ++dst_edges;
    }
    return src_edges == dst_edges;
}

namespace {

// Shared per-supercard data: the two designated cards and the canonical
// classes of their vertex-deleted subgraphs.
struct PairContext {
    const Graph& gplus;
    int v, w;
    DeletionResult ghat;  // G+ - w
    DeletionResult hhat;  // G+ - v

    PairContext(const Graph& g, int v_, int w_) : gplus(g), v(v_), w(w_) {
        g.check_vertex(v);
        g.check_vertex(w);
        if (v == w) throw std::invalid_argument("v and w must be distinct");
        ghat = delete_vertices(g, {w});
        hhat = delete_vertices(g, {v});
    }

    bool isomorphic_designated_cards() const {
        return canonical_form(ghat.graph) == canonical_form(hhat.graph);
    }
};

// Witness map on original ids for a compatible (a, b), lexicographically least.
std::vector<int> edge_witness(const PairContext& ctx, int a, int b) {
    auto ga = delete_vertices(ctx.gplus, {ctx.w, a});
    auto hb = delete_vertices(ctx.gplus, {ctx.v, b});
    auto iso = find_isomorphism(ga.graph, hb.graph);
    if (!iso) throw std::logic_error("compatible pair without isomorphism");
    std::vector<int> out(ctx.gplus.n, -1);
    for (int x = 0; x < ga.graph.n; ++x) out[ga.new_to_old[x]] = hb.new_to_old[(*iso)(x)];
    return out;
}

Permutation realize(const PairContext& ctx, int a, int b, const std::vector<int>& iso) {
    Permutation lambda;
    lambda.map.assign(ctx.gplus.n, -1);
    for (int x = 0; x < ctx.gplus.n; ++x)
        if (x != ctx.w && x != a) lambda.map[x] = iso[x];
    lambda.map[a] = ctx.v;
    lambda.map[ctx.w] = b;
    if (!lambda.is_valid()) throw std::logic_error("realized permutation is not a bijection");
    return lambda;
}

// Is there an isomorphism G+ - w -> G+ - b taking a to v?  Such a map extends
// to an element of B^G with the pair (a, b).
bool bg_realizable(const PairContext& ctx, int a, int b, std::vector<int>* out_iso) {
    auto gb = delete_vertices(ctx.gplus, {b});
    int pin_from = ctx.ghat.old_to_new[a];
    int pin_to = gb.old_to_new[ctx.v];
    auto iso = find_isomorphism_pinned(ctx.ghat.graph, gb.graph, pin_from, pin_to);
    if (!iso) return false;
    if (out_iso) {
        out_iso->assign(ctx.gplus.n, -1);
        for (int x = 0; x < ctx.ghat.graph.n; ++x)
            (*out_iso)[ctx.ghat.new_to_old[x]] = gb.new_to_old[(*iso)(x)];
    }
    return true;
}

Permutation realize_bg(const PairContext& ctx, int a, int b, const std::vector<int>& full_iso) {
    Permutation lambda;
    lambda.map.assign(ctx.gplus.n, -1);
    for (int x = 0; x < ctx.gplus.n; ++x)
        if (x != ctx.w) lambda.map[x] = full_iso[x];
    lambda.map[ctx.w] = b;
    if (!lambda.is_valid() || lambda(a) != ctx.v) throw std::logic_error("B^G realization failed");
    return lambda;
}

// Kuhn's augmenting-path matching over an explicit edge list.
struct Matcher {
    int nl, nr;
    std::vector<std::vector<int>> adj;
    std::vector<int> match_l, match_r;

    Matcher(int l, int r) : nl(l), nr(r), adj(l), match_l(l, -1), match_r(r, -1) {}

    bool augment(int u, std::vector<char>& seen) {
        for (int x : adj[u]) {
            if (seen[x]) continue;
            seen[x] = 1;
            if (match_r[x] < 0 || augment(match_r[x], seen)) {
                match_l[u] = x;
                match_r[x] = u;
                return true;
            }
        }
        return false;
    }

    int run() {
        int size = 0;
        for (int u = 0; u < nl; ++u) {
            std::vector<char> seen(nr, 0);
            if (augment(u, seen)) ++size;
        }
        return size;
    }
};

// Min-cost maximum matching by successive shortest augmenting paths
// (Bellman-Ford rounds; costs are 0 or 1).
struct MinCostMatcher {
    int nl, nr;
    struct Edge {
        int to, cap, cost, flow;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> out;
    int source, sink;

    MinCostMatcher(int l, int r) : nl(l), nr(r), out(l + r + 2), source(l + r), sink(l + r + 1) {
        for (int u = 0; u < nl; ++u) add(source, u, 1, 0);
        for (int x = 0; x < nr; ++x) add(nl + x, sink, 1, 0);
    }

    void add(int from, int to, int cap, int cost) {
        out[from].push_back(static_cast<int>(edges.size()));
        edges.push_back({to, cap, cost, 0});
        out[to].push_back(static_cast<int>(edges.size()));
        edges.push_back({from, 0, -cost, 0});
    }

    void add_pair(int u, int x, int cost) { add(u, nl + x, 1, cost); }

    std::vector<std::tuple<int, int, int>> solve() {
        int nodes = nl + nr + 2;
        std::vector<int> from_of(edges.size());
        for (int node = 0; node < nodes; ++node)
            for (int id : out[node])
                if (edges[id].cap > 0 || edges[id ^ 1].cap > 0) from_of[id] = node;
        while (true) {
            std::vector<int> dist(nodes, 1 << 28), pre(nodes, -1);
            dist[source] = 0;
            bool any = true;
            for (int round = 0; round < nodes && any; ++round) {
                any = false;
                for (std::size_t id = 0; id < edges.size(); ++id) {
                    const auto& e = edges[id];
                    int from = from_of[id];
                    if (e.cap - e.flow <= 0 || dist[from] >= (1 << 28)) continue;
                    if (dist[from] + e.cost < dist[e.to]) {
                        dist[e.to] = dist[from] + e.cost;
                        pre[e.to] = static_cast<int>(id);
                        any = true;
                    }
                }
            }
            if (dist[sink] >= (1 << 28)) break;
            for (int at = sink; at != source; at = from_of[pre[at]]) {
                edges[pre[at]].flow += 1;
                edges[pre[at] ^ 1].flow -= 1;
            }
        }
        std::vector<std::tuple<int, int, int>> used;
        for (int u = 0; u < nl; ++u)
            for (int id : out[u]) {
                const auto& e = edges[id];
                if (e.cap == 1 && e.flow == 1 && e.to >= nl && e.to < nl + nr)
                    used.emplace_back(u, e.to - nl, e.cost);
            }
        std::sort(used.begin(), used.end());
        return used;
    }
};

}  // namespace

Compatibility build_compatibility(const Graph& gplus, int v, int w) {
    PairContext ctx(gplus, v, w);
    Compatibility out;
    out.v = v;
    out.w = w;
    if (ctx.isomorphic_designated_cards()) {
        out.status = SatStatus::unsupported_regime;
        return out;
    }
    std::vector<int> lefts, rights;
    std::vector<CanonicalForm> lclass, rclass;
    for (int a = 0; a < gplus.n; ++a)
        if (a != w) {
            lefts.push_back(a);
            lclass.push_back(canonical_form(delete_vertices(gplus, {w, a}).graph));
        }
    for (int b = 0; b < gplus.n; ++b)
        if (b != v) {
            rights.push_back(b);
            rclass.push_back(canonical_form(delete_vertices(gplus, {v, b}).graph));
        }
    for (std::size_t i = 0; i < lefts.size(); ++i)
        for (std::size_t j = 0; j < rights.size(); ++j)
            if (lclass[i] == rclass[j]) {
                CompatibilityEdge e;
                e.a = lefts[i];
                e.b = rights[j];
                e.iso = edge_witness(ctx, e.a, e.b);
                out.edges.push_back(std::move(e));
            }
    return out;
}

namespace {

SaturatingElement make_element(const PairContext& ctx, int a, int b, const std::vector<int>& iso,
                               bool via_bg) {
    SaturatingElement e;
    e.a = a;
    e.b = b;
    e.lambda = via_bg ? realize_bg(ctx, a, b, iso) : realize(ctx, a, b, iso);
    if (!card_equation_holds(ctx.gplus, ctx.v, ctx.w, e.lambda))
        throw std::logic_error("realized element violates the card equation");
    e.in_BG = bg_membership_holds(ctx.gplus, ctx.w, e.lambda);
    if (via_bg && !e.in_BG) throw std::logic_error("B^G realization lost membership");
    return e;
}

void finish_set(SaturatingSet& set, const Compatibility& compat) {
    std::sort(set.elements.begin(), set.elements.end(),
              [](const SaturatingElement& x, const SaturatingElement& y) {
                  return std::pair(x.a, x.b) < std::pair(y.a, y.b);
              });
    set.contains_identity = false;
    std::set<int> as, bs;
    for (const auto& e : set.elements) {
        if (e.lambda.is_identity()) set.contains_identity = true;
        if (!as.insert(e.a).second || !bs.insert(e.b).second)
            throw std::logic_error("saturating set repeats a or b");
    }
    if (!set.contains_identity) throw std::logic_error("saturating set lost the identity");
    for (const auto& e : compat.edges)
        if (!as.count(e.a) && !bs.count(e.b))
            throw std::logic_error("saturating set is not maximal");
}

struct ResidualIndex {
    std::vector<int> lefts, rights;
    std::map<int, int> lidx, ridx;

    ResidualIndex(const Graph& gplus, int v, int w, const std::set<int>& skip_a,
                  const std::set<int>& skip_b) {
        for (int a = 0; a < gplus.n; ++a)
            if (a != w && !skip_a.count(a)) {
                lidx[a] = static_cast<int>(lefts.size());
                lefts.push_back(a);
            }
        for (int b = 0; b < gplus.n; ++b)
            if (b != v && !skip_b.count(b)) {
                ridx[b] = static_cast<int>(rights.size());
                rights.push_back(b);
            }
    }
};

}  // namespace

SatResult maximum_saturating_set(const Graph& gplus, int v, int w) {
    SatResult res;
    auto compat = build_compatibility(gplus, v, w);
    if (compat.status != SatStatus::ok) {
        res.status = compat.status;
        return res;
    }
    PairContext ctx(gplus, v, w);
    ResidualIndex rix(gplus, v, w, {v}, {w});  // identity edge (v, w) forced
    Matcher matcher(static_cast<int>(rix.lefts.size()), static_cast<int>(rix.rights.size()));
    std::map<std::pair<int, int>, const CompatibilityEdge*> edge_of;
    for (const auto& e : compat.edges) {
        edge_of[{e.a, e.b}] = &e;
        if (e.a != v && e.b != w) matcher.adj[rix.lidx[e.a]].push_back(rix.ridx[e.b]);
    }
    auto it = edge_of.find({v, w});
    if (it == edge_of.end()) throw std::logic_error("identity pair missing from compatibility");
    matcher.run();
    res.set.elements.push_back(make_element(ctx, v, w, it->second->iso, false));
    for (std::size_t u = 0; u < rix.lefts.size(); ++u)
        if (matcher.match_l[u] >= 0) {
            int a = rix.lefts[u], b = rix.rights[matcher.match_l[u]];
            res.set.elements.push_back(make_element(ctx, a, b, edge_of.at({a, b})->iso, false));
        }
    finish_set(res.set, compat);
    return res;
}

ChiResult chi_and_optimum(const Graph& gplus, int v, int w) {
    ChiResult res;
    auto compat = build_compatibility(gplus, v, w);
    if (compat.status != SatStatus::ok) {
        res.status = compat.status;
        return res;
    }
    PairContext ctx(gplus, v, w);
    ResidualIndex rix(gplus, v, w, {v}, {w});
    MinCostMatcher mc(static_cast<int>(rix.lefts.size()), static_cast<int>(rix.rights.size()));
    std::map<std::pair<int, int>, const CompatibilityEdge*> edge_of;
    std::map<std::pair<int, int>, std::vector<int>> bg_iso;
    for (const auto& e : compat.edges) {
        edge_of[{e.a, e.b}] = &e;
        if (e.a == v || e.b == w) continue;
        std::vector<int> iso;
        bool zero = bg_realizable(ctx, e.a, e.b, &iso);
        if (zero) bg_iso[{e.a, e.b}] = std::move(iso);
        mc.add_pair(rix.lidx.at(e.a), rix.ridx.at(e.b), zero ? 0 : 1);
    }
    auto it = edge_of.find({v, w});
    if (it == edge_of.end()) throw std::logic_error("identity pair missing from compatibility");
    res.set.elements.push_back(make_element(ctx, v, w, it->second->iso, false));
    res.chi = 1;  // the identity is in B^G
    for (auto [u, x, cost] : mc.solve()) {
        int a = rix.lefts[u], b = rix.rights[x];
        if (cost == 0) {
            res.set.elements.push_back(make_element(ctx, a, b, bg_iso.at({a, b}), true));
            ++res.chi;
        } else {
            res.set.elements.push_back(make_element(ctx, a, b, edge_of.at({a, b})->iso, false));
        }
    }
    finish_set(res.set, compat);
    return res;
}

CycleAction cycle_action_of(const SunshineSupercard& sc, const Permutation& p) {
    int c = sc.c;
    int alpha = sc.cycle_index_of(p(sc.cycle_order[0]));
    if (alpha >= 0) {
        bool rot = true, ref = true;
        for (int i = 0; i < c; ++i) {
            int img = p(sc.cycle_order[i]);
            if (img != sc.cycle_vertex(alpha + i)) rot = false;
            if (img != sc.cycle_vertex(alpha - i)) ref = false;
        }
        if (rot) return {CycleActionKind::rotation, alpha};
        if (ref) return {CycleActionKind::reflection, alpha};
    }
    return {CycleActionKind::none, 0};
}

SaturatingElement classify_element(const SunshineSupercard& sc, SaturatingElement e) {
    int v = sc.v(), w = sc.w;
    if (!card_equation_holds(sc.graph, v, w, e.lambda))
        throw std::invalid_argument("element is not valid for this supercard");
    e.a = e.lambda.inverse()(v);
    e.b = e.lambda(w);
    e.in_BG = bg_membership_holds(sc.graph, w, e.lambda);
    e.action = cycle_action_of(sc, e.lambda);
    auto t = delete_vertices(sc.graph, {v});
    int bt = t.old_to_new[e.b];
    bool leaf_of_uplus = sc.graph.degree(e.b) == 1;
    bool dleaf_t = is_d_leaf(t.graph, bt);
    e.in_tilde = leaf_of_uplus && dleaf_t;
    if (dleaf_t) {
        e.w_image_class = WImageClass::d_leaf;
    } else if (t.graph.degree(bt) == 1 && is_peripheral_leaf(t.graph, bt)) {
        e.w_image_class = WImageClass::peripheral_non_d_leaf;
    } else {
        bool adj = false;
        for (int u : t.graph.adj[bt])
            if (t.graph.degree(u) == 1 && is_peripheral_leaf(t.graph, u)) adj = true;
        if (!adj) throw std::logic_error("element escapes the w-image trichotomy");
        e.w_image_class = WImageClass::adjacent_to_peripheral;
    }
    return e;
}

std::optional<SaturatingElement> promote_to_BU(const SunshineSupercard& sc,
                                               const SaturatingElement& e) {
    if (!e.in_tilde) throw std::invalid_argument("promote_to_BU requires a tilde element");
    int mu = sc.cycle_index_of(e.a);
    if (mu < 0) throw std::invalid_argument("a is not on the cycle");
    int img = e.lambda(sc.cycle_vertex(mu + 2));
    int plus2 = sc.cycle_vertex(sc.nu + 2);
    int minus2 = sc.cycle_vertex(sc.nu - 2);
    if (img != plus2 && img != minus2) return std::nullopt;
    bool direct = img == plus2;
    // correcting transpositions on the target side
    int t1 = e.lambda(sc.cycle_vertex(mu + 1));
    int t2 = e.lambda(sc.cycle_vertex(mu - 1));
    int s1 = direct ? sc.cycle_vertex(sc.nu + 1) : sc.cycle_vertex(sc.nu - 1);
    int s2 = direct ? sc.cycle_vertex(sc.nu - 1) : sc.cycle_vertex(sc.nu + 1);
    auto swap_apply = [](int x, int p, int q) { return x == p ? q : (x == q ? p : x); };
    SaturatingElement out;
    out.lambda.map.assign(sc.graph.n, -1);
    for (int u = 0; u < sc.graph.n; ++u) {
        if (u == e.a) {
            out.lambda.map[u] = sc.v();
        } else if (u == sc.w) {
            out.lambda.map[u] = e.b;
        } else {
            int x = e.lambda(u);
            x = swap_apply(x, t1, s1);
            x = swap_apply(x, t2, s2);
            out.lambda.map[u] = x;
        }
    }
    if (!out.lambda.is_valid()) throw std::logic_error("promotion produced a non-bijection");
    out = classify_element(sc, std::move(out));
    if (!out.in_BG || out.a != e.a || out.b != e.b)
        throw std::logic_error("promotion failed to land in B^U");
    return out;
}

std::vector<int> rotation_shifts(const SunshineSupercard& sc) {
    auto counts = sc.leaf_count_vector();
    int c = sc.c;
    std::vector<int> shifts;
    for (int s = 0; s < c; ++s) {
        bool ok = true;
        for (int i = 0; i < c && ok; ++i)
            if (counts[i] != counts[(i + s) % c]) ok = false;
        if (ok) shifts.push_back(s);
    }
    return shifts;
}

std::vector<int> reflection_shifts(const SunshineSupercard& sc) {
    auto counts = sc.leaf_count_vector();
    int c = sc.c;
    std::vector<int> shifts;
    for (int b = 0; b < c; ++b) {
        bool ok = true;
        for (int i = 0; i < c && ok; ++i)
            if (counts[i] != counts[((b - i) % c + c) % c]) ok = false;
        if (ok) shifts.push_back(b);
    }
    return shifts;
}

namespace {

Permutation leaf_respecting_map(const SunshineSupercard& sc,
                                const std::function<int(int)>& cycle_image) {
    Permutation p;
    p.map.assign(sc.graph.n, -1);
    for (int i = 0; i < sc.c; ++i) {
        int j = cycle_image(i);
        p.map[sc.cycle_order[i]] = sc.cycle_vertex(j);
        auto from = sc.leaves_at(i);
        auto to = sc.leaves_at(j);
        if (from.size() != to.size()) throw std::logic_error("leaf counts disagree under shift");
        for (std::size_t k = 0; k < from.size(); ++k) p.map[from[k]] = to[k];
    }
    if (!p.is_valid()) throw std::logic_error("cycle map is not a bijection");
    return p;
}

}  // namespace

Permutation rotation_permutation(const SunshineSupercard& sc, int alpha) {
    return leaf_respecting_map(sc, [&](int i) { return ((i + alpha) % sc.c + sc.c) % sc.c; });
}

Permutation reflection_permutation(const SunshineSupercard& sc, int beta) {
    return leaf_respecting_map(sc, [&](int i) { return ((beta - i) % sc.c + sc.c) % sc.c; });
}

std::optional<PhiSubgroup> delta_and_phi(const SunshineSupercard& sc) {
    auto shifts = rotation_shifts(sc);
    int delta = 0;
    for (int s : shifts)
        if (s > 0) {
            delta = s;
            break;
        }
    if (delta == 0) return std::nullopt;
    if (sc.c % delta != 0 || delta < 2 || delta > sc.c / 2)
        throw std::logic_error("delta outside its guaranteed range");
    PhiSubgroup phi;
    phi.delta = delta;
    phi.order = static_cast<std::size_t>(sc.c / delta);
    SaturatingElement gen;
    gen.lambda = rotation_permutation(sc, delta);
    phi.generator = classify_element(sc, std::move(gen));
    return phi;
}

bool bu_equals_aut(const SunshineSupercard& sc) {
    auto counts = sc.leaf_count_vector();
    int c = sc.c;
    auto minus_at = [&](int idx, int at) { return counts[idx] - (idx == at ? 1 : 0); };
    for (int anchor = 0; anchor < c; ++anchor) {
        if (counts[anchor] == 0) continue;
        for (int shift = 0; shift < c; ++shift) {
            if (anchor == shift) continue;  // automorphism-type maps
            bool rot = true, ref = true;
            for (int i = 0; i < c && (rot || ref); ++i) {
                if (minus_at(i, 0) != minus_at((shift + i) % c, anchor)) rot = false;
                if (minus_at(i, 0) != minus_at(((shift - i) % c + c) % c, anchor)) ref = false;
            }
            if (rot || ref) return false;
        }
    }
    return true;
}

OptimumAutResult optimum_aut_set(const SunshineSupercard& sc) {
    OptimumAutResult res;
    auto phi = delta_and_phi(sc);
    if (!phi) {
        res.status = SatStatus::hypothesis_not_met;
        return res;
    }
    int nu = sc.nu, delta = phi->delta;
    res.delta = delta;
    res.phi_order = phi->order;
    auto refs = reflection_shifts(sc);
    bool case_i = true, case_ii = sc.graph.degree(sc.cycle_order[0]) == 3;
    for (int beta : refs) {
        if (((beta - 2 * nu) % delta + delta) % delta != 0) case_i = false;
        if (beta % delta != 0) case_ii = false;
    }
    std::vector<Permutation> xaut;
    for (std::size_t k = 0; k < phi->order; ++k)
        xaut.push_back(rotation_permutation(sc, delta * static_cast<int>(k)));
    if (case_i || case_ii) {
        res.kind = {GroupKindTag::cyclic, phi->order};
    } else {
        int sigma_beta = -1;
        for (int beta : refs)
            if (((beta - 2 * nu) % delta + delta) % delta != 0) {
                sigma_beta = beta;
                break;
            }
        if (sigma_beta < 0) throw std::logic_error("dihedral case without a usable reflection");
        Permutation pi = reflection_permutation(sc, sigma_beta);
        if (sigma_beta % delta == 0) {
            // sigma fixes Phi(x_0) pointwise up to rotation; move w to a second leaf
            auto leaves0 = sc.leaves_at(0);
            if (leaves0.size() < 2)
                throw std::logic_error("leaf-adjusted reflection needs d(x_0) >= 4");
            std::swap(pi.map[leaves0[0]], pi.map[leaves0[1]]);
        }
        if (!is_isomorphism(sc.graph, sc.graph, pi))
            throw std::logic_error("constructed reflection is not an automorphism");
        std::size_t base = xaut.size();
        for (std::size_t k = 0; k < base; ++k) xaut.push_back(pi.compose(xaut[k]));
        res.kind = {GroupKindTag::dihedral, 2 * phi->order};
        const Permutation& gen = phi->generator.lambda;
        if (!pi.compose(pi).is_identity() ||
            !(pi.compose(gen).compose(pi) == gen.inverse()))
            res.kind.tag = GroupKindTag::not_a_group;
    }
    {
        Permutation acc = Permutation::identity(sc.graph.n);
        for (std::size_t k = 0; k < phi->order; ++k) acc = acc.compose(phi->generator.lambda);
        if (!acc.is_identity()) res.kind.tag = GroupKindTag::not_a_group;
    }
    res.aut_count = xaut.size();

    int v = sc.v(), w = sc.w;
    std::set<int> used_a, used_b;
    for (const auto& p : xaut) {
        if (!is_isomorphism(sc.graph, sc.graph, p))
            throw std::logic_error("X_Aut member is not an automorphism");
        SaturatingElement e;
        e.lambda = p;
        e = classify_element(sc, std::move(e));
        if (!e.in_BG) throw std::logic_error("automorphism escaped B^U");
        if (!used_a.insert(e.a).second || !used_b.insert(e.b).second)
            throw std::logic_error("X_Aut violates the distinctness property");
        res.set.elements.push_back(std::move(e));
    }
    auto compat = build_compatibility(sc.graph, v, w);
    if (compat.status != SatStatus::ok) {
        res.status = compat.status;
        return res;
    }
    PairContext ctx(sc.graph, v, w);
    ResidualIndex rix(sc.graph, v, w, used_a, used_b);
    Matcher matcher(static_cast<int>(rix.lefts.size()), static_cast<int>(rix.rights.size()));
    std::map<std::pair<int, int>, const CompatibilityEdge*> edge_of;
    for (const auto& e : compat.edges) {
        edge_of[{e.a, e.b}] = &e;
        if (rix.lidx.count(e.a) && rix.ridx.count(e.b))
            matcher.adj[rix.lidx[e.a]].push_back(rix.ridx[e.b]);
    }
    matcher.run();
    for (std::size_t u = 0; u < rix.lefts.size(); ++u)
        if (matcher.match_l[u] >= 0) {
            int a = rix.lefts[u], b = rix.rights[matcher.match_l[u]];
            auto e = make_element(ctx, a, b, edge_of.at({a, b})->iso, false);
            res.set.elements.push_back(classify_element(sc, std::move(e)));
        }
    finish_set(res.set, compat);
    return res;
}

}  // namespace suncat
