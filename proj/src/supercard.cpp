#include "suncat/supercard.hpp"

#include <algorithm>
#include <map>

namespace suncat {

Graph construct_supercard(const Graph& g, const Graph& h, const Witness& wit) {
    if (!witness_is_valid(g, h, wit)) throw std::invalid_argument("witness failed verification");
    Graph star(g.n + 1);
    for (auto [x, y] : g.edges()) star.add_edge(x, y);
    int w = g.n;
    for (int x = 0; x < g.n; ++x) {
        if (x == wit.v) continue;
        if (h.has_edge(wit.iso[x], wit.t)) star.add_edge(x, w);
    }
    // G* - w = G exactly; G* - v ≅ H
    if (delete_vertices(star, {w}).graph != g) throw std::logic_error("supercard lost G");
    if (canonical_form(delete_vertices(star, {wit.v}).graph) != canonical_form(h))
        throw std::logic_error("supercard lost H");
    return star;
}

SunshineSupercard normalize_sunshine_supercard(const Graph& gplus, int v, int w) {
    if (recognize(gplus).kind != GraphClass::sunshine)
        throw std::invalid_argument("not a sunshine graph");
    if (gplus.degree(w) != 1) throw std::invalid_argument("w must be a leaf");
    if (gplus.degree(v) != 2) throw std::invalid_argument("v must have degree 2");
    auto cycle = unique_cycle(gplus);
    int c = static_cast<int>(cycle.size());
    int x0 = gplus.adj[w][0];
    int start = -1;
    for (int i = 0; i < c; ++i)
        if (cycle[i] == x0) start = i;
    if (start < 0) throw std::invalid_argument("the anchor of w is not on the cycle");
    auto build = [&](bool reversed) {
        SunshineSupercard sc;
        sc.graph = gplus;
        sc.c = c;
        sc.w = w;
        sc.cycle_order.resize(c);
        for (int k = 0; k < c; ++k) {
            int idx = reversed ? ((start - k) % c + c) % c : (start + k) % c;
            sc.cycle_order[k] = cycle[idx];
        }
        sc.nu = sc.cycle_index_of(v);
        return sc;
    };
    SunshineSupercard sc = build(false);
    if (sc.nu < 0) throw std::invalid_argument("v is not on the cycle");
    if (sc.graph.degree(sc.cycle_vertex(sc.nu - 1)) < sc.graph.degree(sc.cycle_vertex(sc.nu + 1)))
        sc = build(true);
    sc.validate();
    return sc;
}

SunshineSupercardResult sunshine_supercard(const Graph& u, const Graph& t) {
    SunshineSupercardResult res;
    if (recognize(u).kind != GraphClass::sunshine || recognize(t).kind != GraphClass::caterpillar) {
        res.status = SupercardStatus::hypothesis_not_met;
        return res;
    }
    res.all_witnesses = witnesses(u, t);
    for (const auto& wit : res.all_witnesses) {
        if (!is_d_leaf(t, wit.t)) continue;
        Graph star = construct_supercard(u, t, wit);
        res.supercard = normalize_sunshine_supercard(star, wit.v, u.n);
        return res;
    }
    res.status = SupercardStatus::hypothesis_not_met;
    return res;
}

std::pair<SunshineSupercard, RebaseContext> rebase_supercard(const SunshineSupercard& sc,
                                                             const SaturatingElement& sigma) {
    if (!sigma.in_tilde) throw std::invalid_argument("rebase requires sigma in the tilde set");
    if (!card_equation_holds(sc.graph, sc.v(), sc.w, sigma.lambda))
        throw std::invalid_argument("sigma is not an active permutation of this supercard");
    RebaseContext ctx;
    ctx.xi = sc.cycle_index_of(sigma.a);
    if (ctx.xi < 0) throw std::logic_error("sigma^{-1}(x_nu) must lie on the cycle");
    // sigma(w) is a leaf of U+; pull its unique neighbour back through sigma
    int b = sigma.b;
    if (sc.graph.degree(b) != 1) throw std::logic_error("tilde element with non-leaf w-image");
    int anchor_b = sc.graph.adj[b][0];
    int x_eta = sigma.lambda.inverse()(anchor_b);
    ctx.eta = sc.cycle_index_of(x_eta);
    if (ctx.eta < 0 || ctx.eta == ctx.xi) throw std::logic_error("rebase anchor collides with xi");

    Graph moved = sc.graph;
    int x0 = sc.cycle_order[0];
    if (x_eta != x0) {
        // delete the edge x_0 w, add x_eta w
        auto& aw = moved.adj[sc.w];
        aw.clear();
        auto& a0 = moved.adj[x0];
        a0.erase(std::find(a0.begin(), a0.end(), sc.w));
        moved.add_edge(x_eta, sc.w);
    }
    auto relabel = [&](bool reversed) {
        SunshineSupercard out;
        out.graph = moved;
        out.c = sc.c;
        out.w = sc.w;
        out.cycle_order.resize(sc.c);
        for (int k = 0; k < sc.c; ++k) {
            int idx = reversed ? ctx.eta - k : ctx.eta + k;
            out.cycle_order[k] = sc.cycle_vertex(idx);
        }
        out.nu = out.cycle_index_of(sc.cycle_vertex(ctx.xi));
        return out;
    };
    SunshineSupercard out = relabel(false);
    ctx.reversed = false;
    if (out.graph.degree(out.cycle_vertex(out.nu - 1)) <
        out.graph.degree(out.cycle_vertex(out.nu + 1))) {
        out = relabel(true);
        ctx.reversed = true;
    }
    ctx.zeta = out.nu;
    // vertex ids are untouched, so the relabeling map is the identity on ids
    ctx.theta = Permutation::identity(sc.graph.n);
    out.validate();
    return {out, ctx};
}

namespace {

CanonicalForm designated_form(const Graph& gplus, int v, int w) {
    std::vector<int> colors(gplus.n, 0);
    colors[v] = 1;
    colors[w] = 2;
    return canonical_form_colored(gplus, colors);
}

}  // namespace

BestSupercard best_supercard(const Graph& u, const Graph& t) {
    BestSupercard best;
    if (recognize(u).kind != GraphClass::sunshine || recognize(t).kind != GraphClass::caterpillar) {
        best.status = SupercardStatus::hypothesis_not_met;
        return best;
    }
    auto wits = witnesses(u, t);
    std::map<CanonicalForm, std::pair<SunshineSupercard, std::size_t>> seen;
    for (const auto& wit : wits) {
        if (!is_d_leaf(t, wit.t)) continue;
        Graph star = construct_supercard(u, t, wit);
        auto form = designated_form(star, wit.v, u.n);
        if (seen.count(form)) continue;
        auto sc = normalize_sunshine_supercard(star, wit.v, u.n);
        auto chi = chi_and_optimum(sc.graph, sc.v(), sc.w);
        if (chi.status != SatStatus::ok) continue;
        seen.emplace(form, std::pair{std::move(sc), chi.chi});
    }
    best.considered = seen.size();
    if (seen.empty()) {
        best.status = SupercardStatus::hypothesis_not_met;
        return best;
    }
    // argmax by chi; equal values fall back to the least designated form (map order)
    for (const auto& [form, entry] : seen)
        if (!best.supercard || entry.second > best.chi) {
            best.supercard = entry.first;
            best.chi = entry.second;
        }
    return best;
}

}  // namespace suncat
