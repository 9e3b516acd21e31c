#pragma once

#include <nlohmann/json_fwd.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ftclab/core.hpp"

#include <json.hpp>

namespace ftclab {

// Undirected simple graph on agents 0..K-1. Edges are stored canonically
// with first < second, so the set is duplicate- and self-loop-free.
struct Graph {
  int num_agents = 0;
  std::set<std::pair<int, int>> edges;
  std::string name;

  Graph() = default;
  Graph(int k, std::string label) : num_agents(k), name(std::move(label)) {
    if (k < 1) throw InvalidParameterError("graph needs at least one agent");
  }

  void add_edge(int i, int j) {
    if (i == j) throw InvalidInputError("self-loops are not allowed");
    if (i < 0 || j < 0 || i >= num_agents || j >= num_agents)
      throw InvalidInputError("edge endpoint out of range");
    edges.emplace(std::min(i, j), std::max(i, j));
  }

  bool has_edge(int i, int j) const {
    return edges.count({std::min(i, j), std::max(i, j)}) > 0;
  }

  int degree(int k) const {
    int d = 0;
    for (const auto& [a, b] : edges) d += (a == k) + (b == k);
    return d;
  }

  std::vector<int> neighbors(int k) const {
    std::vector<int> out;
    for (const auto& [a, b] : edges) {
      if (a == k) out.push_back(b);
      if (b == k) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void validate() const {
    if (num_agents < 1) throw InvalidInputError("graph has no agents");
    for (const auto& [a, b] : edges) {
      if (a < 0 || b >= num_agents || a >= b)
        throw InvalidInputError("malformed edge (" + std::to_string(a) + "," +
                                std::to_string(b) + ")");
    }
  }
};

inline bool is_connected(const Graph& g) {
  if (g.num_agents <= 1) return true;
  std::vector<char> seen(static_cast<size_t>(g.num_agents), 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    int u = frontier.front();
    frontier.pop();
    for (int v : g.neighbors(u)) {
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == g.num_agents;
}

enum class TopologyKind { path, ring, star, complete, hypercube };

inline std::string to_string(TopologyKind kind) {
  switch (kind) {
    case TopologyKind::path: return "path";
    case TopologyKind::ring: return "ring";
    case TopologyKind::star: return "star";
    case TopologyKind::complete: return "complete";
    case TopologyKind::hypercube: return "hypercube";
  }
  throw InvalidParameterError("unknown topology kind");
}

inline TopologyKind topology_from_string(const std::string& s) {
  if (s == "path") return TopologyKind::path;
  if (s == "ring") return TopologyKind::ring;
  if (s == "star") return TopologyKind::star;
  if (s == "complete") return TopologyKind::complete;
  if (s == "hypercube") return TopologyKind::hypercube;
  throw InvalidParameterError("unknown topology kind: " + s);
}

// For the hypercube, size_param is the dimension d and K = 2^d; vertices are
// d-bit integers joined when they differ in exactly one bit. For every other
// family size_param is the agent count.
inline Graph build_topology(TopologyKind kind, int size_param) {
  if (size_param < 1) throw InvalidParameterError("size_param must be >= 1");
  switch (kind) {
    case TopologyKind::path: {
      Graph g(size_param, "path:" + std::to_string(size_param));
      for (int i = 0; i + 1 < size_param; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case TopologyKind::ring: {
      Graph g(size_param, "ring:" + std::to_string(size_param));
      for (int i = 0; size_param > 1 && i < size_param; ++i)
        g.add_edge(i, (i + 1) % size_param);
      return g;
    }
    case TopologyKind::star: {
      Graph g(size_param, "star:" + std::to_string(size_param));
      for (int i = 1; i < size_param; ++i) g.add_edge(0, i);
      return g;
    }
    case TopologyKind::complete: {
      Graph g(size_param, "complete:" + std::to_string(size_param));
      for (int i = 0; i < size_param; ++i)
        for (int j = i + 1; j < size_param; ++j) g.add_edge(i, j);
      return g;
    }
    case TopologyKind::hypercube: {
      if (size_param > 20)
        throw InvalidParameterError("hypercube dimension too large");
      const int k = 1 << size_param;
      Graph g(k, "hypercube:" + std::to_string(size_param));
      for (int v = 0; v < k; ++v)
        for (int bit = 0; bit < size_param; ++bit) {
          int u = v ^ (1 << bit);
          if (u > v) g.add_edge(v, u);
        }
      return g;
    }
  }
  throw InvalidParameterError("unknown topology kind");
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["K"] = g.num_agents;
  j["name"] = g.name;
  auto edges = nlohmann::json::array();
  for (const auto& [a, b] : g.edges) edges.push_back({a, b});
  j["edges"] = edges;
  return j;
}

inline Graph graph_from_json(const nlohmann::json& j) {
  Graph g(j.at("K").get<int>(), j.value("name", std::string{}));
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw IoError("edge must be a pair");
    g.add_edge(e[0].get<int>(), e[1].get<int>());
  }
  g.validate();
  return g;
}

inline void save_graph(const Graph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << graph_to_json(g).dump(2) << "\n";
}

inline Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  nlohmann::json j;
  in >> j;
  return graph_from_json(j);
}

}  // namespace ftclab
