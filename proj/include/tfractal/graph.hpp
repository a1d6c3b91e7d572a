#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tfractal/errors.hpp"

namespace tfractal {

using Vertex = std::size_t;
using EdgeId = std::size_t;
using Cost = std::int64_t;

/// One edge (or arc, when the owning graph is directed). Undirected edges are
/// stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Cost cost = 1;    // deletion cost
  Cost length = 1;  // hop length

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex to = 0;
  EdgeId edge = 0;
};

/// Per-edge deletion flags indexed by EdgeId. An empty mask deletes nothing.
using EdgeMask = std::vector<bool>;

inline bool is_removed(const EdgeMask& mask, EdgeId e) {
  return e < mask.size() && mask[e];
}

inline EdgeMask mask_of(std::size_t edge_count, std::span<const EdgeId> edges) {
  EdgeMask mask(edge_count, false);
  for (EdgeId e : edges) {
    if (e >= edge_count) throw input_error("edge id out of range");
    mask[e] = true;
  }
  return mask;
}

/// Labeled multigraph, optionally directed, with deletion costs and hop
/// lengths per edge. Adjacency lists are kept sorted by neighbor id so that
/// every traversal breaks ties towards the smallest vertex id.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count, bool directed = false)
      : directed_(directed), out_(vertex_count), in_(directed ? vertex_count : 0),
        labels_(vertex_count) {}

  Vertex add_vertex(std::string label = {}) {
    out_.emplace_back();
    if (directed_) in_.emplace_back();
    labels_.push_back(std::move(label));
    return out_.size() - 1;
  }

  EdgeId add_edge(Vertex u, Vertex v, Cost cost = 1, Cost length = 1) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("self-loops are not allowed");
    if (cost < 1) throw input_error("edge cost must be positive");
    if (length < 1) throw input_error("edge length must be positive");
    if (!directed_ && v < u) std::swap(u, v);
    const EdgeId id = edges_.size();
    edges_.push_back(Edge{u, v, cost, length});
    insert_sorted(out_[u], Incidence{v, id});
    if (directed_) {
      insert_sorted(in_[v], Incidence{u, id});
    } else {
      insert_sorted(out_[v], Incidence{u, id});
    }
    return id;
  }

  bool directed() const { return directed_; }
  std::size_t vertex_count() const { return out_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const {
    if (e >= edges_.size()) throw input_error("edge id out of range");
    return edges_[e];
  }
  std::span<const Edge> edges() const { return edges_; }

  /// Outgoing arcs, or all incident edges for an undirected graph.
  std::span<const Incidence> out(Vertex v) const {
    check_vertex(v);
    return out_[v];
  }
  /// Incoming arcs, or all incident edges for an undirected graph.
  std::span<const Incidence> in(Vertex v) const {
    check_vertex(v);
    return directed_ ? std::span<const Incidence>(in_[v]) : std::span<const Incidence>(out_[v]);
  }

  std::size_t degree(Vertex v) const {
    return directed_ ? out(v).size() + in(v).size() : out(v).size();
  }
  std::size_t max_degree() const {
    std::size_t best = 0;
    for (Vertex v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
    return best;
  }

  const std::string& label(Vertex v) const {
    check_vertex(v);
    return labels_[v];
  }
  void set_label(Vertex v, std::string label) {
    check_vertex(v);
    labels_[v] = std::move(label);
  }
  bool has_labels() const {
    return std::any_of(labels_.begin(), labels_.end(), [](const std::string& s) { return !s.empty(); });
  }

  bool unit_lengths() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.length == 1; });
  }
  bool unit_costs() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.cost == 1; });
  }

  /// Simple mode: no parallel edges, unit costs and unit lengths.
  bool is_simple() const {
    if (!unit_lengths() || !unit_costs()) return false;
    for (Vertex v = 0; v < vertex_count(); ++v) {
      const auto& adj = out_[v];
      for (std::size_t i = 1; i < adj.size(); ++i) {
        if (adj[i].to == adj[i - 1].to) return false;
      }
    }
    return true;
  }

  Cost total_cost(std::span<const EdgeId> ids) const {
    Cost sum = 0;
    for (EdgeId e : ids) sum += edge(e).cost;
    return sum;
  }

  bool has_vertex(Vertex v) const { return v < vertex_count(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.directed_ == b.directed_ && a.vertex_count() == b.vertex_count() &&
           a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v >= out_.size()) throw input_error("vertex id " + std::to_string(v) + " out of range");
  }

  static void insert_sorted(std::vector<Incidence>& list, Incidence inc) {
    auto pos = std::upper_bound(list.begin(), list.end(), inc, [](const Incidence& a, const Incidence& b) {
      return a.to != b.to ? a.to < b.to : a.edge < b.edge;
    });
    list.insert(pos, inc);
  }

  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> out_;
  std::vector<std::vector<Incidence>> in_;
  std::vector<std::string> labels_;
};

/// A set of edges whose removal separates a designated terminal pair.
struct CutCertificate {
  std::vector<EdgeId> edges;  // sorted ascending
  Cost total_cost = 0;
  bool minimal = false;

  friend bool operator==(const CutCertificate&, const CutCertificate&) = default;
};

}  // namespace tfractal
