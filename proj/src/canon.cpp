#include "suncat/canon.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>

namespace suncat {

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 0xf]);
    }
    return s;
}

CanonicalForm CanonicalForm::from_hex(const std::string& s) {
    if (s.size() % 2 != 0) throw std::invalid_argument("hex string with odd length");
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw std::invalid_argument("bad hex digit");
    };
    CanonicalForm f;
    f.bytes.reserve(s.size() / 2);
    for (std::size_t i = 0; i < s.size(); i += 2)
        f.bytes.push_back(static_cast<std::uint8_t>(nib(s[i]) * 16 + nib(s[i + 1])));
    return f;
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.map.resize(n);
    for (int i = 0; i < n; ++i) p.map[i] = i;
    return p;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.map.assign(map.size(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) p.map[map[i]] = static_cast<int>(i);
    return p;
}

Permutation Permutation::compose(const Permutation& first) const {
    Permutation p;
    p.map.resize(map.size());
    for (std::size_t i = 0; i < map.size(); ++i) p.map[i] = map[first.map[i]];
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < map.size(); ++i)
        if (map[i] != static_cast<int>(i)) return false;
    return true;
}

bool Permutation::is_valid() const {
    std::vector<char> seen(map.size(), 0);
    for (int v : map) {
        if (v < 0 || v >= static_cast<int>(map.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
    if (p.size() != g.n || !p.is_valid()) throw std::invalid_argument("bad permutation");
    Graph h(g.n);
    for (auto [u, v] : g.edges()) h.add_edge(p(u), p(v));
    return h;
}

bool is_isomorphism(const Graph& g, const Graph& h, const Permutation& gamma) {
    if (g.n != h.n || gamma.size() != g.n || !gamma.is_valid()) return false;
    if (g.edge_count() != h.edge_count()) return false;
    for (auto [u, v] : g.edges())
        if (!h.has_edge(gamma(u), gamma(v))) return false;
    return true;
}

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> m(g.n, 0);
    for (int v = 0; v < g.n; ++v)
        for (int u : g.adj[v]) m[v] |= Mask{1} << u;
    return m;
}

// One round of colour refinement: signature = (colour, neighbour colour counts).
// Returns false once stable.
bool refine_round(const std::vector<Mask>& adj, std::vector<int>& color) {
    int n = static_cast<int>(adj.size());
    int k = *std::max_element(color.begin(), color.end()) + 1;
    std::vector<std::vector<int>> keys(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> cnt(k, 0);
        Mask m = adj[v];
        while (m) {
            int u = std::countr_zero(m);
            m &= m - 1;
            ++cnt[color[u]];
        }
        keys[v].reserve(k + 1);
        keys[v].push_back(color[v]);
        keys[v].insert(keys[v].end(), cnt.begin(), cnt.end());
    }
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (keys[a] != keys[b]) return keys[a] < keys[b];
        return a < b;
    });
    std::vector<int> next(n);
    int rank = 0;
    for (int i = 0; i < n; ++i) {
        if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++rank;
        next[order[i]] = rank;
    }
    bool changed = rank + 1 != k;
    color = std::move(next);
    return changed;
}

void refine(const std::vector<Mask>& adj, std::vector<int>& color) {
    while (refine_round(adj, color)) {
    }
}

std::vector<std::uint8_t> encode_discrete(const Graph& g, const std::vector<int>& color) {
    std::vector<int> pos(g.n);
    for (int v = 0; v < g.n; ++v) pos[color[v]] = v;
    std::vector<std::uint8_t> bytes;
    bytes.reserve(2 + (g.n * (g.n - 1) / 2 + 7) / 8);
    bytes.push_back(static_cast<std::uint8_t>(g.n >> 8));
    bytes.push_back(static_cast<std::uint8_t>(g.n & 0xff));
    std::uint8_t acc = 0;
    int nbits = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) {
            acc = static_cast<std::uint8_t>(acc << 1 | (g.has_edge(pos[i], pos[j]) ? 1 : 0));
            if (++nbits == 8) {
                bytes.push_back(acc);
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) bytes.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
    return bytes;
}

struct CanonSearch {
    const Graph& g;
    const std::vector<Mask>& adj;
    std::vector<std::uint8_t> best;
    bool have_best = false;

    void run(std::vector<int> color) {
        refine(adj, color);
        int n = g.n;
        int k = *std::max_element(color.begin(), color.end()) + 1;
        if (k == n) {
            auto enc = encode_discrete(g, color);
            if (!have_best || enc < best) {
                best = std::move(enc);
                have_best = true;
            }
            return;
        }
        // target cell: smallest non-singleton class, then lowest colour
        std::vector<int> size(k, 0);
        for (int v = 0; v < n; ++v) ++size[color[v]];
        int target = -1;
        for (int c = 0; c < k; ++c)
            if (size[c] > 1 && (target < 0 || size[c] < size[target])) target = c;
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (color[v] == target) cell.push_back(v);
        // branch once per twin class: a transposition of twins is an automorphism
        std::vector<char> skip(cell.size(), 0);
        for (std::size_t i = 0; i < cell.size(); ++i) {
            if (skip[i]) continue;
            for (std::size_t j = i + 1; j < cell.size(); ++j) {
                int u = cell[i], v = cell[j];
                if ((adj[u] & ~(Mask{1} << v)) == (adj[v] & ~(Mask{1} << u))) skip[j] = 1;
            }
            std::vector<int> child(n);
            for (int x = 0; x < n; ++x) child[x] = color[x] * 2 + 1;
            child[cell[i]] -= 1;  // the individualized vertex precedes its old class
            run(std::move(child));
        }
    }
};

std::vector<std::uint8_t> canonical_bytes(const Graph& g, const std::vector<int>& init) {
    auto adj = adjacency_masks(g);
    CanonSearch search{g, adj, {}, false};
    search.run(init);
    return search.best;
}

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.n > kCanonMaxVertices)
        throw ResourceError("canonical_form supports at most 64 vertices", kCanonMaxVertices);
    CanonicalForm f;
    if (g.n == 0) {
        f.bytes = {0, 0};
        return f;
    }
    f.bytes = canonical_bytes(g, std::vector<int>(g.n, 0));
    return f;
}

CanonicalForm canonical_form_colored(const Graph& g, const std::vector<int>& colors) {
    if (g.n > kCanonMaxVertices)
        throw ResourceError("canonical_form supports at most 64 vertices", kCanonMaxVertices);
    if (static_cast<int>(colors.size()) != g.n) throw std::invalid_argument("colour vector size mismatch");
    CanonicalForm f;
    if (g.n == 0) {
        f.bytes = {0, 0};
        return f;
    }
    // normalise colours to ranks 0..k-1
    std::vector<int> sorted(colors);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> init(g.n);
    for (int v = 0; v < g.n; ++v)
        init[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), colors[v]) - sorted.begin());
    f.bytes = canonical_bytes(g, init);
    // refinement keeps initial colour blocks contiguous, so the per-position
    // colour sequence is identical at every leaf; append it for comparability
    // across graphs with different colour distributions
    std::vector<int> hist(sorted.size(), 0);
    for (int c : init) ++hist[c];
    for (int h : hist) {
        f.bytes.push_back(static_cast<std::uint8_t>(h >> 8));
        f.bytes.push_back(static_cast<std::uint8_t>(h & 0xff));
    }
    return f;
}

namespace {

struct IsoSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> img;       // image of g-vertex, -1 unassigned
    std::vector<char> used;     // h-vertex already an image
    int pin_a = -1, pin_b = -1;

    bool extend(int v) {
        int n = g.n;
        if (v == n) return true;
        if (pin_a == v) return try_image(v, pin_b);
        for (int cand = 0; cand < n; ++cand)
            if (try_image(v, cand)) return true;
        return false;
    }

    bool try_image(int v, int cand) {
        if (used[cand] || g.degree(v) != h.degree(cand)) return false;
        if (pin_a >= 0 && pin_a != v && cand == pin_b) return false;
        for (int u = 0; u < v; ++u)
            if (g.has_edge(u, v) != h.has_edge(img[u], cand)) return false;
        img[v] = cand;
        used[cand] = 1;
        if (extend(v + 1)) return true;
        img[v] = -1;
        used[cand] = 0;
        return false;
    }
};

bool same_degree_histogram(const Graph& g, const Graph& h) {
    auto a = degree_histogram(g), b = degree_histogram(h);
    a.resize(std::max(a.size(), b.size()), 0);
    b.resize(std::max(a.size(), b.size()), 0);
    return a == b;
}

}  // namespace

std::optional<Permutation> find_isomorphism(const Graph& g, const Graph& h) {
    if (g.n != h.n || g.edge_count() != h.edge_count() || !same_degree_histogram(g, h))
        return std::nullopt;
    IsoSearch search{g, h, std::vector<int>(g.n, -1), std::vector<char>(g.n, 0)};
    if (!search.extend(0)) return std::nullopt;
    Permutation p;
    p.map = std::move(search.img);
    return p;
}

std::optional<Permutation> find_isomorphism_pinned(const Graph& g, const Graph& h, int a, int b) {
    g.check_vertex(a);
    h.check_vertex(b);
    if (g.n != h.n || g.edge_count() != h.edge_count() || !same_degree_histogram(g, h))
        return std::nullopt;
    if (g.degree(a) != h.degree(b)) return std::nullopt;
    IsoSearch search{g, h, std::vector<int>(g.n, -1), std::vector<char>(g.n, 0), a, b};
    if (!search.extend(0)) return std::nullopt;
    Permutation p;
    p.map = std::move(search.img);
    return p;
}

namespace {

struct AutSearch {
    const Graph& g;
    std::size_t cap;
    std::vector<int> img;
    std::vector<char> used;
    std::vector<Permutation> found;

    void extend(int v) {
        if (v == g.n) {
            if (found.size() >= cap) throw ResourceError("automorphism group too large", cap);
            Permutation p;
            p.map = img;
            found.push_back(std::move(p));
            return;
        }
        for (int cand = 0; cand < g.n; ++cand) {
            if (used[cand] || g.degree(v) != g.degree(cand)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.has_edge(u, v) != g.has_edge(img[u], cand)) ok = false;
            if (!ok) continue;
            img[v] = cand;
            used[cand] = 1;
            extend(v + 1);
            img[v] = -1;
            used[cand] = 0;
        }
    }
};

}  // namespace

std::vector<Permutation> automorphism_group(const Graph& g, const AutGroupOptions& opt) {
    if (g.n > opt.max_vertices)
        throw ResourceError("automorphism_group vertex cap exceeded",
                            static_cast<std::size_t>(opt.max_vertices));
    AutSearch search{g, opt.max_elements, std::vector<int>(g.n, -1), std::vector<char>(g.n, 0), {}};
    search.extend(0);
    return search.found;
}

bool check_neighborhood_extension(const Graph& g, const Graph& h, int v, const Permutation& gamma) {
    if (g.n != h.n) throw std::invalid_argument("check_neighborhood_extension: order mismatch");
    g.check_vertex(v);
    if (gamma.size() != g.n || !gamma.is_valid()) throw std::invalid_argument("bad bijection");
    int gv = gamma(v);
    // gamma(G-v) = H-gamma(v): edge-preserving and onto
    int eg = 0, eh = 0;
    for (auto [x, y] : g.edges()) {
        if (x == v || y == v) continue;
        ++eg;
        if (!h.has_edge(gamma(x), gamma(y))) return false;
    }
    for (auto [x, y] : h.edges())
        if (x != gv && y != gv) ++eh;
    if (eg != eh) return false;
    // gamma(N_G(v)) = N_H(gamma(v))
    std::vector<int> lhs;
    for (int u : g.adj[v]) lhs.push_back(gamma(u));
    std::sort(lhs.begin(), lhs.end());
    return lhs == h.adj[gv];
}

}  // namespace suncat
