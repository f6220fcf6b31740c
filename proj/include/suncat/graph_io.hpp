#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "suncat/graph.hpp"

namespace suncat {

// graph6: byte n+63 for n <= 62, else 126 followed by three 6-bit groups
// (18-bit n); upper-triangle bits column-major, 6 per byte, each +63.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view s);

// {"n": int, "edges": [[u, v], ...]} with u < v, sorted.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Undirected DOT; when a cycle order is supplied those vertices are listed
// first, in order.
std::string to_dot(const Graph& g, const std::vector<int>* cycle_order = nullptr);

}  // namespace suncat
