#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tfractal/algorithms.hpp"
#include "tfractal/graph.hpp"

namespace tfractal {

/// A triangle erected on a marked edge: `base` belongs to boundary
/// depth-1, the two sides to boundary `depth`.
struct Triangle {
  EdgeId base = 0;
  EdgeId left = 0;
  EdgeId right = 0;
  Vertex apex = 0;
  std::size_t depth = 0;
};

/// Rooted tree whose edges correspond one-to-one to fractal edges. The root
/// is the split outer-face vertex next to {sigma, tau}; leaves are the split
/// outer-face vertices next to the last boundary.
struct DualTree {
  enum class NodeKind { root, triangle, leaf };

  struct Node {
    NodeKind kind = NodeKind::root;
    std::size_t parent = 0;
    std::size_t depth = 0;
    EdgeId edge = 0;  // fractal edge dual to the edge towards the parent
    std::vector<std::size_t> children;
  };

  std::vector<Node> nodes;                // nodes[0] is the root
  std::vector<std::size_t> node_of_edge;  // fractal edge -> child endpoint of its tree edge
  std::vector<std::size_t> leaf_order;    // leaves left to right
  std::vector<std::size_t> gap_of_leaf;   // indexed by node id; 0 for non-leaves
  std::vector<std::size_t> leaf_of_gap;   // indexed by gap 1..p; entry 0 unused

  std::size_t leaf_count() const { return leaf_order.size(); }

  /// Fractal edges along the root-leaf path, from the root downwards.
  std::vector<EdgeId> path_edges(std::size_t leaf) const {
    if (leaf >= nodes.size() || nodes[leaf].kind != NodeKind::leaf) throw input_error("not a leaf of the dual tree");
    std::vector<EdgeId> edges;
    for (std::size_t v = leaf; v != 0; v = nodes[v].parent) edges.push_back(nodes[v].edge);
    std::reverse(edges.begin(), edges.end());
    return edges;
  }
};

/// Triangle fractal of depth q. Vertex ids are the positions along the last
/// boundary path, so sigma = 0, tau = 2^q, and v_i has id i.
struct TFractal {
  Graph graph;
  Vertex sigma = 0;
  Vertex tau = 1;
  std::size_t depth = 0;
  Cost edge_cost = 1;
  std::vector<std::vector<EdgeId>> boundaries;  // B_0 .. B_q, each left to right
  std::vector<Triangle> triangles;              // in construction order
  DualTree dual;

  std::size_t instance_count() const { return std::size_t{1} << depth; }
  Vertex boundary_vertex(std::size_t i) const { return i; }
};

inline constexpr std::size_t max_fractal_depth = 24;

DualTree dual_tree(const TFractal& f);

/// Iterative construction: start from the marked edge {sigma, tau}; each round
/// erects a triangle on every marked edge, marks the two new sides and
/// unmarks the old ones. Directed fractals orient every boundary from sigma
/// to tau, which here means from the smaller to the larger position.
inline TFractal build_fractal(std::size_t q, bool directed = false, Cost cost = 1) {
  if (q > max_fractal_depth) throw input_error("fractal depth too large");
  if (cost < 1) throw input_error("edge cost must be positive");
  const std::size_t p = std::size_t{1} << q;
  TFractal f;
  f.graph = Graph(p + 1, directed);
  f.sigma = 0;
  f.tau = p;
  f.depth = q;
  f.edge_cost = cost;
  f.graph.set_label(f.sigma, "sigma");
  f.graph.set_label(f.tau, "tau");

  std::vector<EdgeId> marked{f.graph.add_edge(f.sigma, f.tau, cost)};
  f.boundaries.push_back(marked);
  for (std::size_t round = 1; round <= q; ++round) {
    std::vector<EdgeId> next;
    next.reserve(2 * marked.size());
    for (EdgeId base : marked) {
      const Edge e = f.graph.edge(base);
      const Vertex apex = (e.u + e.v) / 2;
      const EdgeId left = f.graph.add_edge(e.u, apex, cost);
      const EdgeId right = f.graph.add_edge(apex, e.v, cost);
      f.triangles.push_back(Triangle{base, left, right, apex, round});
      next.push_back(left);
      next.push_back(right);
    }
    marked = std::move(next);
    f.boundaries.push_back(marked);
  }
  f.dual = dual_tree(f);
  return f;
}

/// Recursive form: two copies of depth q-1 glued at tau' = sigma'' plus the
/// edge {sigma', tau''}. Returns the same position labeling as build_fractal
/// but an independent edge order (B_0 last); used to cross-check.
inline std::pair<Graph, std::vector<std::vector<std::pair<Vertex, Vertex>>>> build_fractal_recursive(
    std::size_t q, bool directed = false, Cost cost = 1) {
  if (q > max_fractal_depth) throw input_error("fractal depth too large");
  using Boundaries = std::vector<std::vector<std::pair<Vertex, Vertex>>>;
  const std::size_t p = std::size_t{1} << q;
  Graph g(p + 1, directed);
  g.set_label(0, "sigma");
  g.set_label(p, "tau");

  // Appends the edges of a depth-d copy with sigma at `offset` and returns
  // its boundaries.
  auto build = [&](auto&& self, std::size_t d, Vertex offset) -> Boundaries {
    const Vertex sigma = offset;
    const Vertex tau = offset + (std::size_t{1} << d);
    if (d == 0) {
      g.add_edge(sigma, tau, cost);
      return Boundaries{{{sigma, tau}}};
    }
    const Vertex mid = offset + (std::size_t{1} << (d - 1));
    Boundaries left = self(self, d - 1, sigma);
    Boundaries right = self(self, d - 1, mid);
    g.add_edge(sigma, tau, cost);
    Boundaries out{{{sigma, tau}}};
    for (std::size_t i = 0; i < left.size(); ++i) {
      auto level = left[i];
      level.insert(level.end(), right[i].begin(), right[i].end());
      out.push_back(std::move(level));
    }
    return out;
  };
  Boundaries boundaries = build(build, q, 0);
  return {std::move(g), std::move(boundaries)};
}

inline DualTree dual_tree(const TFractal& f) {
  using NodeKind = DualTree::NodeKind;
  DualTree t;
  t.node_of_edge.assign(f.graph.edge_count(), 0);
  t.nodes.push_back(DualTree::Node{NodeKind::root, 0, 0, 0, {}});

  std::vector<std::size_t> triangle_on_base(f.graph.edge_count(), f.triangles.size());
  for (std::size_t i = 0; i < f.triangles.size(); ++i) triangle_on_base[f.triangles[i].base] = i;

  // Walks down from the tree edge dual to `edge`, left side first so leaves
  // come out in left-to-right order.
  auto attach = [&](auto&& self, std::size_t parent, EdgeId edge) -> void {
    const std::size_t id = t.nodes.size();
    const std::size_t depth = t.nodes[parent].depth + 1;
    t.nodes[parent].children.push_back(id);
    t.node_of_edge[edge] = id;
    const std::size_t tri = triangle_on_base[edge];
    if (tri == f.triangles.size()) {
      t.nodes.push_back(DualTree::Node{NodeKind::leaf, parent, depth, edge, {}});
      t.leaf_order.push_back(id);
      return;
    }
    t.nodes.push_back(DualTree::Node{NodeKind::triangle, parent, depth, edge, {}});
    self(self, id, f.triangles[tri].left);
    self(self, id, f.triangles[tri].right);
  };
  attach(attach, 0, f.boundaries.front().front());

  t.gap_of_leaf.assign(t.nodes.size(), 0);
  t.leaf_of_gap.assign(t.leaf_order.size() + 1, 0);
  for (std::size_t leaf : t.leaf_order) {
    // The leaf hangs off the last-boundary edge (v_{i-1}, v_i).
    const Edge& e = f.graph.edge(t.nodes[leaf].edge);
    const std::size_t gap = std::max(e.u, e.v);
    t.gap_of_leaf[leaf] = gap;
    t.leaf_of_gap[gap] = leaf;
  }
  return t;
}

inline CutCertificate cut_of_leaf(const TFractal& f, std::size_t leaf) {
  CutCertificate cut;
  cut.edges = f.dual.path_edges(leaf);
  std::sort(cut.edges.begin(), cut.edges.end());
  cut.total_cost = f.graph.total_cost(cut.edges);
  cut.minimal = true;
  return cut;
}

/// All minimum sigma-tau cuts, one per root-leaf path, in leaf order.
inline std::vector<CutCertificate> enumerate_min_cuts(const TFractal& f) {
  std::vector<CutCertificate> cuts;
  cuts.reserve(f.dual.leaf_count());
  for (std::size_t leaf : f.dual.leaf_order) cuts.push_back(cut_of_leaf(f, leaf));
  return cuts;
}

/// The minimum cut that leaves v_{i-1} with sigma and v_i with tau.
inline CutCertificate cut_for_instance(const TFractal& f, std::size_t i) {
  if (i < 1 || i > f.instance_count()) {
    throw input_error("instance index " + std::to_string(i) + " outside 1.." + std::to_string(f.instance_count()));
  }
  return cut_of_leaf(f, f.dual.leaf_of_gap[i]);
}

/// Inverse of cut_for_instance; rejects edge sets that are not minimum cuts.
inline std::size_t selected_instance(const TFractal& f, const CutCertificate& cut) {
  const auto& last = f.boundaries.back();
  for (EdgeId e : cut.edges) {
    if (e >= f.graph.edge_count()) throw input_error("edge id out of range");
    if (!std::binary_search(last.begin(), last.end(), e)) continue;
    const std::size_t gap = f.dual.gap_of_leaf[f.dual.node_of_edge[e]];
    auto sorted = cut.edges;
    std::sort(sorted.begin(), sorted.end());
    if (cut_for_instance(f, gap).edges != sorted) break;
    return gap;
  }
  throw input_error("edge set is not a minimum sigma-tau cut of the fractal");
}

}  // namespace tfractal
