#pragma once

// JSON serialization for graphs and reports.  The on-disk graph form is
// canonical: edges sorted with u < v, labels emitted only when present, keys
// in fixed order.  Reports carry no timing data, so equal inputs produce
// byte-identical files.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "symcay/errors.hpp"
#include "symcay/graph.hpp"
#include "symcay/transitivity.hpp"

namespace symcay {

using ordered_json = nlohmann::ordered_json;

inline ordered_json graph_to_json(const Graph& g) {
  ordered_json j;
  j["n"] = g.n();
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  ordered_json labels = ordered_json::object();
  if (g.has_labels()) {
    for (int v = 0; v < g.n(); ++v) labels[std::to_string(v)] = g.labels()[static_cast<std::size_t>(v)];
  }
  j["labels"] = std::move(labels);
  return j;
}

inline Graph graph_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw hypothesis_error("graph JSON needs fields n and edges");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw hypothesis_error("graph JSON edge is not a pair");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  std::vector<std::string> labels;
  if (j.contains("labels") && j.at("labels").is_object() && !j.at("labels").empty()) {
    labels.assign(static_cast<std::size_t>(n), "");
    for (const auto& [k, v] : j.at("labels").items()) {
      int idx = std::stoi(k);
      if (idx < 0 || idx >= n) throw hypothesis_error("graph JSON label index out of range");
      labels[static_cast<std::size_t>(idx)] = v.get<std::string>();
    }
  }
  return Graph(n, std::move(edges), std::move(labels));
}

inline std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << text;
  if (!out.good()) throw io_error("write failed: " + path);
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_graph(const std::string& path, const Graph& g) {
  write_text_file(path, dump_json(graph_to_json(g)));
}

inline Graph read_graph(const std::string& path) {
  ordered_json j;
  try {
    j = ordered_json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw hypothesis_error(std::string("graph JSON parse failure: ") + e.what());
  }
  return graph_from_json(j);
}

inline ordered_json transitivity_to_json(const TransitivityReport& r) {
  ordered_json j;
  j["vertex_transitive"] = r.vertex_transitive;
  j["edge_transitive"] = r.edge_transitive;
  j["arc_transitive"] = r.arc_transitive;
  j["max_s"] = r.max_s;
  j["stabilizer_order"] = r.stabilizer_order;
  j["classification"] = to_string(r.classification);
  return j;
}

}  // namespace symcay
