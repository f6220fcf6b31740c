#include "suncat/graph_io.hpp"

#include <algorithm>

namespace suncat {

namespace {

constexpr int kG6MaxShort = 62;
constexpr int kG6MaxLong = 258047;  // 18-bit size field

void append_sextets(std::string& out, const std::vector<int>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int val = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            val <<= 1;
            if (i + j < bits.size()) val |= bits[i + j];
        }
        out.push_back(static_cast<char>(val + 63));
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    if (g.n > kG6MaxLong) throw std::invalid_argument("graph6: order too large");
    std::string out;
    if (g.n <= kG6MaxShort) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back(126);
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((g.n >> shift) & 0x3f) + 63));
    }
    std::vector<int> bits;
    bits.reserve(static_cast<std::size_t>(g.n) * (g.n - 1) / 2);
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
    append_sextets(out, bits);
    return out;
}

Graph from_graph6(std::string_view s) {
    constexpr std::string_view header = ">>graph6<<";
    if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    auto val = [&](std::size_t i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return static_cast<int>(c - 63);
    };
    std::size_t pos = 0;
    long n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126)
            throw std::invalid_argument("graph6: 36-bit sizes unsupported");
        if (s.size() < 4) throw std::invalid_argument("graph6: truncated size");
        n = (static_cast<long>(val(1)) << 12) | (val(2) << 6) | val(3);
        pos = 4;
    } else {
        n = val(0);
        pos = 1;
    }
    long nbits = n * (n - 1) / 2;
    std::size_t expect = pos + static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() != expect) throw std::invalid_argument("graph6: wrong length");
    Graph g(static_cast<int>(n));
    long bit = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int group = val(pos + bit / 6);
            if ((group >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    // padding bits must be zero
    if (nbits % 6 != 0) {
        int group = val(s.size() - 1);
        int pad = static_cast<int>(6 - nbits % 6);
        if ((group & ((1 << pad) - 1)) != 0) throw std::invalid_argument("graph6: nonzero padding");
    }
    return g;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["n"] = g.n;
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

std::string to_dot(const Graph& g, const std::vector<int>* cycle_order) {
    std::string out = "graph {\n";
    std::vector<char> listed(g.n, 0);
    if (cycle_order) {
        out += "  // cycle\n";
        for (int v : *cycle_order) {
            out += "  " + std::to_string(v) + ";\n";
            listed[v] = 1;
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (!listed[v]) out += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace suncat
