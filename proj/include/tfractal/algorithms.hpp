#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <vector>

#include "tfractal/graph.hpp"

namespace tfractal {

inline constexpr std::size_t unreachable = std::numeric_limits<std::size_t>::max();

namespace detail {

inline void require_unit_lengths(const Graph& g) {
  if (!g.unit_lengths()) throw input_error("hop-metric search requires unit edge lengths; subdivide first");
}

}  // namespace detail

/// Hop distances from `from` to every vertex; `unreachable` marks vertices
/// that cannot be reached. Direction is respected for directed graphs.
inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex from, const EdgeMask& removed = {}) {
  detail::require_unit_lengths(g);
  if (!g.has_vertex(from)) throw input_error("vertex id out of range");
  std::vector<std::size_t> dist(g.vertex_count(), unreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[from] = 0;
  queue.push_back(from);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (const Incidence& inc : g.out(v)) {
      if (is_removed(removed, inc.edge) || dist[inc.to] != unreachable) continue;
      dist[inc.to] = dist[v] + 1;
      queue.push_back(inc.to);
    }
  }
  return dist;
}

/// Distances towards `to` along arcs (reverse search). Equal to
/// bfs_distances for undirected graphs.
inline std::vector<std::size_t> bfs_distances_to(const Graph& g, Vertex to, const EdgeMask& removed = {}) {
  detail::require_unit_lengths(g);
  if (!g.has_vertex(to)) throw input_error("vertex id out of range");
  std::vector<std::size_t> dist(g.vertex_count(), unreachable);
  std::vector<Vertex> queue{to};
  dist[to] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = queue[head];
    for (const Incidence& inc : g.in(v)) {
      if (is_removed(removed, inc.edge) || dist[inc.to] != unreachable) continue;
      dist[inc.to] = dist[v] + 1;
      queue.push_back(inc.to);
    }
  }
  return dist;
}

inline std::optional<std::size_t> bfs_distance(const Graph& g, Vertex from, Vertex to,
                                               const EdgeMask& removed = {}) {
  if (!g.has_vertex(to)) throw input_error("vertex id out of range");
  const auto dist = bfs_distances(g, from, removed);
  if (dist[to] == unreachable) return std::nullopt;
  return dist[to];
}

/// A shortest from-to path as edge ids in walking order. BFS scans neighbors
/// in increasing vertex id, and each vertex keeps the first parent found.
inline std::optional<std::vector<EdgeId>> shortest_path(const Graph& g, Vertex from, Vertex to,
                                                        const EdgeMask& removed = {}) {
  detail::require_unit_lengths(g);
  if (!g.has_vertex(from) || !g.has_vertex(to)) throw input_error("vertex id out of range");
  constexpr EdgeId none = std::numeric_limits<EdgeId>::max();
  std::vector<EdgeId> parent_edge(g.vertex_count(), none);
  std::vector<Vertex> parent(g.vertex_count(), 0);
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> queue{from};
  seen[from] = true;
  for (std::size_t head = 0; head < queue.size() && !seen[to]; ++head) {
    const Vertex v = queue[head];
    for (const Incidence& inc : g.out(v)) {
      if (is_removed(removed, inc.edge) || seen[inc.to]) continue;
      seen[inc.to] = true;
      parent[inc.to] = v;
      parent_edge[inc.to] = inc.edge;
      queue.push_back(inc.to);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<EdgeId> path;
  for (Vertex v = to; v != from; v = parent[v]) path.push_back(parent_edge[v]);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Component id per vertex in the underlying undirected graph.
inline std::vector<std::size_t> components(const Graph& g, const EdgeMask& removed = {}) {
  std::vector<std::size_t> comp(g.vertex_count(), unreachable);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex start = 0; start < g.vertex_count(); ++start) {
    if (comp[start] != unreachable) continue;
    comp[start] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      auto visit = [&](const Incidence& inc) {
        if (is_removed(removed, inc.edge) || comp[inc.to] != unreachable) return;
        comp[inc.to] = next;
        stack.push_back(inc.to);
      };
      for (const Incidence& inc : g.out(v)) visit(inc);
      if (g.directed()) {
        for (const Incidence& inc : g.in(v)) visit(inc);
      }
    }
    ++next;
  }
  return comp;
}

inline std::size_t component_count(const Graph& g, const EdgeMask& removed = {}) {
  const auto comp = components(g, removed);
  return comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
}

/// Connectivity of the underlying undirected graph (weak connectivity for
/// directed graphs). The empty graph counts as connected.
inline bool is_connected(const Graph& g, const EdgeMask& removed = {}) {
  return component_count(g, removed) <= 1;
}

inline bool is_strongly_connected(const Graph& g, const EdgeMask& removed = {}) {
  if (g.vertex_count() <= 1) return true;
  auto reach = [&](bool forward) {
    std::vector<bool> seen(g.vertex_count(), false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : forward ? g.out(v) : g.in(v)) {
        if (is_removed(removed, inc.edge) || seen[inc.to]) continue;
        seen[inc.to] = true;
        ++count;
        stack.push_back(inc.to);
      }
    }
    return count == g.vertex_count();
  };
  return reach(true) && reach(false);
}

/// Kahn order of a directed graph, or nullopt when a directed cycle exists.
inline std::optional<std::vector<Vertex>> topological_order(const Graph& g, const EdgeMask& removed = {}) {
  if (!g.directed()) throw input_error("topological order needs a directed graph");
  std::vector<std::size_t> indegree(g.vertex_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!is_removed(removed, e)) ++indegree[g.edge(e).v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<Vertex> order;
  while (!ready.empty()) {
    const Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    for (const Incidence& inc : g.out(v)) {
      if (is_removed(removed, inc.edge)) continue;
      if (--indegree[inc.to] == 0) ready.push(inc.to);
    }
  }
  if (order.size() != g.vertex_count()) return std::nullopt;
  return order;
}

inline bool is_acyclic(const Graph& g, const EdgeMask& removed = {}) {
  return topological_order(g, removed).has_value();
}

/// Largest shortest-path distance over ordered vertex pairs; nullopt when
/// some pair is unreachable (infinite diameter).
inline std::optional<std::size_t> diameter(const Graph& g, const EdgeMask& removed = {}) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto dist = bfs_distances(g, v, removed);
    for (std::size_t d : dist) {
      if (d == unreachable) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

/// Cut vertices of the underlying undirected graph (iterative Tarjan).
inline std::vector<bool> articulation_points(const Graph& g, const EdgeMask& removed = {}) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> cut(n, false);
  std::vector<std::size_t> disc(n, unreachable), low(n, 0);
  struct Frame {
    Vertex v;
    EdgeId via;
    std::size_t next;
  };
  constexpr EdgeId none = std::numeric_limits<EdgeId>::max();
  std::size_t timer = 0;
  std::vector<std::vector<Incidence>> lists(n);
  for (Vertex v = 0; v < n; ++v) {
    for (const Incidence& inc : g.out(v)) {
      if (!is_removed(removed, inc.edge)) lists[v].push_back(inc);
    }
    if (g.directed()) {
      for (const Incidence& inc : g.in(v)) {
        if (!is_removed(removed, inc.edge)) lists[v].push_back(inc);
      }
    }
  }
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != unreachable) continue;
    std::size_t root_children = 0;
    std::vector<Frame> stack{{root, none, 0}};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < lists[f.v].size()) {
        const Incidence inc = lists[f.v][f.next++];
        if (inc.edge == f.via) continue;
        if (disc[inc.to] == unreachable) {
          disc[inc.to] = low[inc.to] = timer++;
          if (f.v == root) ++root_children;
          stack.push_back(Frame{inc.to, inc.edge, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[inc.to]);
        }
        continue;
      }
      const Vertex child = f.v;
      stack.pop_back();
      if (stack.empty()) break;
      const Vertex parent = stack.back().v;
      low[parent] = std::min(low[parent], low[child]);
      if (parent != root && low[child] >= disc[parent]) cut[parent] = true;
    }
    if (root_children > 1) cut[root] = true;
  }
  return cut;
}

/// Whether some ordered pair is at distance >= ell, unreachable pairs
/// counting as infinitely far. For connected undirected graphs only non-cut
/// vertices are searched from: if x were a cut vertex of a diametral pair
/// (x, y), a vertex z behind x would satisfy d(z, y) > d(x, y).
inline bool diameter_at_least(const Graph& g, std::size_t ell, const EdgeMask& removed = {}) {
  if (ell == 0) return true;
  const bool connected = g.directed() ? is_strongly_connected(g, removed) : is_connected(g, removed);
  if (!connected) return true;
  std::vector<bool> skip(g.vertex_count(), false);
  if (!g.directed() && g.vertex_count() >= 3) skip = articulation_points(g, removed);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (skip[v]) continue;
    const auto dist = bfs_distances(g, v, removed);
    if (*std::max_element(dist.begin(), dist.end()) >= ell) return true;
  }
  return false;
}

namespace detail {

/// Dinic max-flow on a residual network with 64-bit capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t n) : adj_(n) {}

  std::size_t add_arc(Vertex from, Vertex to, Cost cap_forward, Cost cap_backward) {
    const std::size_t id = arcs_.size();
    arcs_.push_back({to, cap_forward});
    arcs_.push_back({from, cap_backward});
    adj_[from].push_back(id);
    adj_[to].push_back(id + 1);
    return id;
  }

  Cost max_flow(Vertex s, Vertex t) {
    Cost flow = 0;
    while (build_levels(s, t)) {
      iter_.assign(adj_.size(), 0);
      while (Cost pushed = augment(s, t, std::numeric_limits<Cost>::max())) flow += pushed;
    }
    return flow;
  }

  /// Vertices reachable from s in the residual network.
  std::vector<bool> source_side(Vertex s) const {
    std::vector<bool> seen(adj_.size(), false);
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (std::size_t id : adj_[v]) {
        const auto& arc = arcs_[id];
        if (arc.cap > 0 && !seen[arc.to]) {
          seen[arc.to] = true;
          stack.push_back(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  struct Arc {
    Vertex to;
    Cost cap;
  };

  bool build_levels(Vertex s, Vertex t) {
    level_.assign(adj_.size(), -1);
    std::deque<Vertex> queue{s};
    level_[s] = 0;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (std::size_t id : adj_[v]) {
        const auto& arc = arcs_[id];
        if (arc.cap > 0 && level_[arc.to] < 0) {
          level_[arc.to] = level_[v] + 1;
          queue.push_back(arc.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  Cost augment(Vertex v, Vertex t, Cost limit) {
    if (v == t) return limit;
    for (std::size_t& i = iter_[v]; i < adj_[v].size(); ++i) {
      const std::size_t id = adj_[v][i];
      Arc& arc = arcs_[id];
      if (arc.cap <= 0 || level_[arc.to] != level_[v] + 1) continue;
      if (Cost pushed = augment(arc.to, t, std::min(limit, arc.cap))) {
        arc.cap -= pushed;
        arcs_[id ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
};

}  // namespace detail

/// Minimum-cost s-t edge cut via max-flow with capacities equal to deletion
/// costs. Edges in `removed` are treated as already gone; edges flagged in
/// `fixed` cannot be cut (infinite capacity).
inline CutCertificate min_cut(const Graph& g, Vertex s, Vertex t, const EdgeMask& removed = {},
                              const EdgeMask& fixed = {}) {
  if (!g.has_vertex(s) || !g.has_vertex(t)) throw input_error("vertex id out of range");
  if (s == t) throw input_error("min_cut needs distinct terminals");
  Cost total = 0;
  for (const Edge& e : g.edges()) total += e.cost;
  const Cost infinite = total + 1;
  detail::FlowNetwork net(g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (is_removed(removed, e)) continue;
    const Edge& edge = g.edge(e);
    const Cost cap = is_removed(fixed, e) ? infinite : edge.cost;
    net.add_arc(edge.u, edge.v, cap, g.directed() ? 0 : cap);
  }
  const Cost flow = net.max_flow(s, t);
  const auto side = net.source_side(s);
  CutCertificate cut;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (is_removed(removed, e)) continue;
    const Edge& edge = g.edge(e);
    const bool crosses = g.directed() ? (side[edge.u] && !side[edge.v]) : (side[edge.u] != side[edge.v]);
    if (crosses) {
      cut.edges.push_back(e);
      cut.total_cost += edge.cost;
    }
  }
  // Every crossing edge is saturated, so the cut value equals the flow and a
  // minimum-cost cut with positive costs has no redundant edge.
  cut.minimal = flow < infinite;
  if (!cut.minimal) cut.total_cost = flow;
  return cut;
}

/// Result of replacing every edge of cost c by c parallel length-2 paths.
struct Subdivision {
  Graph graph;
  /// copies[e] lists the 2c unit edges that replace original edge e, in
  /// (first half, second half) pairs.
  std::vector<std::vector<EdgeId>> copies;
};

inline Subdivision subdivide_with_map(const Graph& g) {
  Subdivision out{Graph(g.vertex_count(), g.directed()), {}};
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.graph.set_label(v, g.label(v));
  out.copies.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    for (Cost j = 0; j < edge.cost; ++j) {
      const Vertex mid = out.graph.add_vertex();
      out.copies[e].push_back(out.graph.add_edge(edge.u, mid));
      out.copies[e].push_back(out.graph.add_edge(mid, edge.v));
    }
  }
  return out;
}

/// Simple-mode expansion: distances between original vertices double and
/// separating a former adjacency of cost c takes exactly c unit deletions.
inline Graph subdivide_and_multiply(const Graph& g) { return subdivide_with_map(g).graph; }

}  // namespace tfractal
