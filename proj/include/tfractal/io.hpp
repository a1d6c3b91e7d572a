#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tfractal/composer.hpp"
#include "tfractal/fractal.hpp"
#include "tfractal/graph.hpp"
#include "tfractal/instance.hpp"
#include "tfractal/reducer.hpp"

namespace tfractal {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void fail_field(const std::string& field, const std::string& what) {
  throw parse_error("field '" + field + "': " + what);
}

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("malformed JSON: ") + e.what());
  }
}

inline const Json& require(const Json& obj, const std::string& field) {
  if (!obj.is_object()) throw parse_error("expected a JSON object at top level");
  auto it = obj.find(field);
  if (it == obj.end()) fail_field(field, "missing");
  return *it;
}

inline std::int64_t get_int(const Json& obj, const std::string& field) {
  const Json& v = require(obj, field);
  if (!v.is_number_integer()) fail_field(field, "expected an integer");
  return v.get<std::int64_t>();
}

inline std::size_t get_index(const Json& v, const std::string& field) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) fail_field(field, "expected a non-negative integer");
  return v.get<std::size_t>();
}

inline bool get_bool(const Json& obj, const std::string& field) {
  const Json& v = require(obj, field);
  if (!v.is_boolean()) fail_field(field, "expected a boolean");
  return v.get<bool>();
}

inline Json edge_list(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
  return edges;
}

inline void put_graph(Json& out, const Graph& g) {
  out["directed"] = g.directed();
  out["n"] = g.vertex_count();
  out["edges"] = edge_list(g);
  if (!g.unit_costs()) {
    Json costs = Json::array();
    for (const Edge& e : g.edges()) costs.push_back(e.cost);
    out["costs"] = costs;
  }
  if (g.has_labels()) {
    Json labels = Json::object();
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!g.label(v).empty()) labels[std::to_string(v)] = g.label(v);
    }
    out["labels"] = labels;
  }
}

inline Graph take_graph(const Json& obj) {
  const bool directed = get_bool(obj, "directed");
  const std::int64_t n = get_int(obj, "n");
  if (n < 0) fail_field("n", "must be non-negative");
  Graph g(static_cast<std::size_t>(n), directed);
  const Json& edges = require(obj, "edges");
  if (!edges.is_array()) fail_field("edges", "expected an array");
  const Json* costs = nullptr;
  if (auto it = obj.find("costs"); it != obj.end()) {
    if (!it->is_array() || it->size() != edges.size()) fail_field("costs", "expected one cost per edge");
    costs = &*it;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const Json& e = edges[i];
    if (!e.is_array() || e.size() != 2) fail_field(where, "expected [u, v]");
    const std::size_t u = get_index(e[0], where);
    const std::size_t v = get_index(e[1], where);
    Cost cost = 1;
    if (costs) {
      const Json& c = (*costs)[i];
      if (!c.is_number_integer()) fail_field("costs[" + std::to_string(i) + "]", "expected an integer");
      cost = c.get<Cost>();
    }
    try {
      g.add_edge(u, v, cost);
    } catch (const input_error& err) {
      fail_field(where, err.what());
    }
  }
  if (auto it = obj.find("labels"); it != obj.end()) {
    if (!it->is_object()) fail_field("labels", "expected an object");
    for (const auto& [key, value] : it->items()) {
      std::size_t v = 0;
      try {
        std::size_t used = 0;
        v = std::stoul(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail_field("labels", "key '" + key + "' is not a vertex id");
      }
      if (!g.has_vertex(v)) fail_field("labels", "vertex " + key + " out of range");
      if (!value.is_string()) fail_field("labels", "label of " + key + " must be a string");
      g.set_label(v, value.get<std::string>());
    }
  }
  return g;
}

}  // namespace detail

inline Json instance_to_json(const ProblemInstance& inst) {
  Json out;
  out["problem"] = std::string(to_string(inst.kind));
  detail::put_graph(out, inst.graph);
  if (inst.s) out["s"] = *inst.s;
  if (inst.t) out["t"] = *inst.t;
  out["k"] = inst.k;
  out["ell"] = inst.ell;
  return out;
}

inline std::string serialize_instance(const ProblemInstance& inst) { return instance_to_json(inst).dump(); }

inline ProblemInstance instance_from_json(const Json& obj) {
  ProblemInstance inst;
  const Json& problem = detail::require(obj, "problem");
  if (!problem.is_string()) detail::fail_field("problem", "expected a string");
  try {
    inst.kind = problem_kind_from(problem.get<std::string>());
  } catch (const input_error& e) {
    detail::fail_field("problem", e.what());
  }
  inst.graph = detail::take_graph(obj);
  for (const char* name : {"s", "t"}) {
    auto it = obj.find(name);
    if (it == obj.end()) continue;
    const std::size_t v = detail::get_index(*it, name);
    if (!inst.graph.has_vertex(v)) detail::fail_field(name, "vertex out of range");
    (name[0] == 's' ? inst.s : inst.t) = v;
  }
  if (inst.kind == ProblemKind::lbec && (!inst.s || !inst.t)) detail::fail_field(inst.s ? "t" : "s", "missing");
  inst.k = detail::get_int(obj, "k");
  inst.ell = detail::get_int(obj, "ell");
  return inst;
}

inline ProblemInstance parse_instance(const std::string& text) { return instance_from_json(detail::parse_text(text)); }

inline Json verdict_to_json(const Graph& g, const Verdict& v) {
  Json out;
  out["answer"] = v.answer;
  Json witness = Json::array();
  for (EdgeId e : v.witness) witness.push_back(Json::array({g.edge(e).u, g.edge(e).v}));
  out["witness"] = witness;
  out["nodes"] = v.nodes;
  return out;
}

/// Fractal document: the graph plus sigma, tau, depth and boundary edge ids.
inline Json fractal_to_json(const TFractal& f) {
  Json out;
  out["depth"] = f.depth;
  out["sigma"] = f.sigma;
  out["tau"] = f.tau;
  detail::put_graph(out, f.graph);
  out["boundaries"] = f.boundaries;
  return out;
}

inline Graph parse_graph(const std::string& text) { return detail::take_graph(detail::parse_text(text)); }
inline std::string serialize_graph(const Graph& g) {
  Json out;
  detail::put_graph(out, g);
  return out.dump();
}

inline std::string to_dimacs(const Graph& g) {
  std::ostringstream os;
  os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
  return os.str();
}

/// DOT with sigma/tau marked by the node attribute "role"; when `boundary`
/// is given (one index per edge) edges are colored by it.
inline std::string to_dot(const Graph& g, const std::vector<std::size_t>& boundary = {}, Vertex sigma = unreachable,
                          Vertex tau = unreachable) {
  static const char* palette[] = {"black", "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan"};
  std::ostringstream os;
  const char* arrow = g.directed() ? " -> " : " -- ";
  os << (g.directed() ? "digraph" : "graph") << " tfractal {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (v == sigma) {
      os << " [role=\"sigma\"]";
    } else if (v == tau) {
      os << " [role=\"tau\"]";
    } else if (!g.label(v).empty()) {
      os << " [label=\"" << g.label(v) << "\"]";
    }
    os << ";\n";
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    os << "  " << edge.u << arrow << edge.v;
    std::vector<std::string> attrs;
    if (e < boundary.size()) {
      attrs.push_back("boundary=" + std::to_string(boundary[e]));
      attrs.push_back(std::string("color=\"") + palette[boundary[e] % std::size(palette)] + "\"");
    }
    if (edge.cost != 1) attrs.push_back("cost=" + std::to_string(edge.cost));
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
      os << ']';
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string fractal_to_dot(const TFractal& f) {
  std::vector<std::size_t> boundary(f.graph.edge_count(), 0);
  for (std::size_t i = 0; i < f.boundaries.size(); ++i) {
    for (EdgeId e : f.boundaries[i]) boundary[e] = i;
  }
  return to_dot(f.graph, boundary, f.sigma, f.tau);
}

/// Sidecar of a composition: selector (leaf index -> input index, both
/// 1-based), parameter record and mode.
inline Json sidecar_to_json(const CompositionArtifact& art) {
  Json out;
  Json selector = Json::object();
  for (std::size_t i = 1; i < art.selector.size(); ++i) selector[std::to_string(i)] = art.selector[i];
  out["selector"] = selector;
  Json params;
  params["p"] = art.params.p;
  params["q"] = art.params.q;
  params["c"] = art.params.c;
  params["k_prime"] = art.params.k_prime;
  params["ell_prime"] = art.params.ell_prime;
  if (art.params.L) params["L"] = *art.params.L;
  params["n_max"] = art.params.n_max;
  out["params"] = params;
  out["mode"] = std::string(to_string(art.mode));
  return out;
}

/// {"n": int, "edges": [[u, v], ...], "k": int}
inline VcInstance parse_vc(const std::string& text) {
  const Json obj = detail::parse_text(text);
  Json graph = obj;
  if (!graph.contains("directed")) graph["directed"] = false;
  VcInstance vc{detail::take_graph(graph), detail::get_int(obj, "k")};
  if (vc.graph.directed()) detail::fail_field("directed", "vertex cover input must be undirected");
  return vc;
}

inline std::string serialize_vc(const VcInstance& vc) {
  Json out;
  out["n"] = vc.graph.vertex_count();
  out["edges"] = detail::edge_list(vc.graph);
  out["k"] = vc.k;
  return out.dump();
}

/// {"order": [...], "pages": {"u-v": "upper" | "lower", ...}}
inline TwoPageEmbedding parse_embedding(const std::string& text) {
  const Json obj = detail::parse_text(text);
  TwoPageEmbedding emb;
  const Json& order = detail::require(obj, "order");
  if (!order.is_array()) detail::fail_field("order", "expected an array");
  for (std::size_t i = 0; i < order.size(); ++i) {
    emb.order.push_back(detail::get_index(order[i], "order[" + std::to_string(i) + "]"));
  }
  const Json& pages = detail::require(obj, "pages");
  if (!pages.is_object()) detail::fail_field("pages", "expected an object");
  for (const auto& [key, value] : pages.items()) {
    const std::string where = "pages." + key;
    const auto dash = key.find('-');
    Vertex u = 0;
    Vertex v = 0;
    try {
      std::size_t used_u = 0;
      std::size_t used_v = 0;
      if (dash == std::string::npos) throw std::invalid_argument(key);
      u = std::stoul(key.substr(0, dash), &used_u);
      v = std::stoul(key.substr(dash + 1), &used_v);
      if (used_u != dash || used_v != key.size() - dash - 1) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      detail::fail_field(where, "key must have the form \"u-v\"");
    }
    if (!value.is_string() || (value != "upper" && value != "lower")) {
      detail::fail_field(where, "expected \"upper\" or \"lower\"");
    }
    emb.pages[edge_key(u, v)] = value == "upper" ? Page::upper : Page::lower;
  }
  return emb;
}

inline std::string serialize_embedding(const TwoPageEmbedding& emb) {
  Json out;
  out["order"] = emb.order;
  Json pages = Json::object();
  for (const auto& [key, page] : emb.pages) {
    pages[std::to_string(key.first) + "-" + std::to_string(key.second)] = page == Page::upper ? "upper" : "lower";
  }
  out["pages"] = pages;
  return out.dump();
}

}  // namespace tfractal
