#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tfractal/algorithms.hpp"
#include "tfractal/graph.hpp"
#include "tfractal/instance.hpp"

namespace tfractal {

enum class Page { upper, lower };

/// Spine order plus a page per edge. order[pos] is the vertex at spine
/// position pos; pages are keyed by (min, max) endpoint.
struct TwoPageEmbedding {
  std::vector<Vertex> order;
  std::map<std::pair<Vertex, Vertex>, Page> pages;
};

struct VcInstance {
  Graph graph;
  std::int64_t k = 0;
};

inline std::pair<Vertex, Vertex> edge_key(Vertex u, Vertex v) { return u < v ? std::pair{u, v} : std::pair{v, u}; }

/// Spine positions of all vertices, or an empty vector when `order` is not a
/// permutation of the vertex ids.
inline std::vector<std::size_t> spine_positions(const Graph& g, const TwoPageEmbedding& emb) {
  if (emb.order.size() != g.vertex_count()) return {};
  std::vector<std::size_t> pos(g.vertex_count(), unreachable);
  for (std::size_t i = 0; i < emb.order.size(); ++i) {
    const Vertex v = emb.order[i];
    if (v >= g.vertex_count() || pos[v] != unreachable) return {};
    pos[v] = i;
  }
  return pos;
}

/// True iff the order is a permutation, every edge has a page and no two
/// edges on the same page interleave along the spine.
inline bool validate_embedding(const Graph& g, const TwoPageEmbedding& emb) {
  const auto pos = spine_positions(g, emb);
  if (pos.empty() && g.vertex_count() > 0) return false;
  struct Arc {
    std::size_t a, b;
    Page page;
  };
  std::vector<Arc> arcs;
  for (const Edge& e : g.edges()) {
    auto it = emb.pages.find(edge_key(e.u, e.v));
    if (it == emb.pages.end()) return false;
    arcs.push_back(Arc{std::min(pos[e.u], pos[e.v]), std::max(pos[e.u], pos[e.v]), it->second});
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (arcs[i].page != arcs[j].page) continue;
      const Arc& x = arcs[i];
      const Arc& y = arcs[j];
      if ((x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b)) return false;
    }
  }
  return true;
}

inline bool is_vertex_cover(const Graph& g, const std::vector<bool>& in_cover) {
  for (const Edge& e : g.edges()) {
    if (!in_cover[e.u] && !in_cover[e.v]) return false;
  }
  return true;
}

inline constexpr std::size_t max_vc_vertices = 20;

/// Exhaustive vertex-cover check over all vertex subsets of size <= k.
inline bool solve_vc_bruteforce(const VcInstance& inst) {
  const std::size_t n = inst.graph.vertex_count();
  if (n > max_vc_vertices) throw resource_error("vertex cover brute force is limited to 20 vertices");
  if (inst.k < 0) return false;
  std::vector<bool> in_cover(n, false);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) > inst.k) continue;
    for (std::size_t v = 0; v < n; ++v) in_cover[v] = (mask >> v) & 1U;
    if (is_vertex_cover(inst.graph, in_cover)) return true;
  }
  return false;
}

/// Bookkeeping of a reduced instance.
struct VcReduction {
  ProblemInstance instance;
  /// Per input vertex: its two deletable middle edges {x^u, y^u}, {x^l, y^l}.
  std::vector<std::array<EdgeId, 2>> middle_edges;
  std::vector<Vertex> gadget_s;  // per spine position
  std::vector<Vertex> gadget_t;
  std::size_t connector_interior = 0;  // vertices added by connector paths
};

struct ReduceOptions {
  bool directed = false;  // orient every edge from left to right
  /// Expand the weighted instance with subdivide_and_multiply (threshold
  /// doubled) so that all costs are 1.
  bool simple = false;
};

/// Vertex Cover on a two-page-embedded max-degree-3 graph into LBEC. The
/// vertex at spine position i becomes a gadget of two P_{2k} (upper, lower)
/// and one P_{2k+1} between s_i and t_i, with t_i = s_{i+1}. An edge between
/// positions i < j on a page becomes a path of length (2k-1)(j-i)-2 from
/// y_i to x_j on that page. k' = 2k, ell' = k(2k) + (n-k)(2k-1).
///
/// Only the middle edges {x, y} may be deleted: they cost 1, every other
/// edge costs k'+1. Without this, three deletions at the first gadget
/// disconnect s from t and every instance would be a YES-instance.
inline VcReduction reduce_vc_to_planar_lbec(const VcInstance& vc, const TwoPageEmbedding& emb,
                                            const ReduceOptions& opts = {}) {
  const Graph& in = vc.graph;
  const std::int64_t k = vc.k;
  if (k < 2) throw input_error("reduction needs k >= 2 (connector length (2k-1)(j-i)-2 must be positive)");
  if (in.directed()) throw input_error("vertex cover input must be undirected");
  if (in.max_degree() > 3) throw input_error("vertex cover input must have maximum degree 3");
  if (!in.is_simple()) throw input_error("vertex cover input must be a simple graph");
  if (in.vertex_count() >= 3 && in.edge_count() + 6 > 3 * in.vertex_count()) {
    throw input_error("input violates the planar edge bound |E| <= 3|V| - 6");
  }
  if (!validate_embedding(in, emb)) throw input_error("invalid two-page embedding");
  const std::size_t n = in.vertex_count();
  if (n == 0) throw input_error("vertex cover input has no vertices");
  const auto pos = spine_positions(in, emb);
  const std::int64_t k_prime = 2 * k;
  const Cost heavy = k_prime + 1;

  VcReduction out;
  Graph g(0, opts.directed);
  out.middle_edges.resize(n);
  // Per spine position: x and y on each page.
  std::vector<std::array<Vertex, 2>> x(n), y(n);
  auto chain = [&](Vertex from, std::int64_t edges, Vertex to) {
    Vertex cur = from;
    for (std::int64_t j = 1; j < edges; ++j) {
      const Vertex next = g.add_vertex();
      g.add_edge(cur, next, heavy);
      cur = next;
    }
    g.add_edge(cur, to, heavy);
  };
  Vertex s = g.add_vertex("s");
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex t = g.add_vertex();
    out.gadget_s.push_back(s);
    out.gadget_t.push_back(t);
    const Vertex v = emb.order[i];
    for (int page = 0; page < 2; ++page) {
      // P_{2k}: s .. x (k-1 edges), x - y, y .. t (k-1 edges).
      const Vertex xv = g.add_vertex();
      const Vertex yv = g.add_vertex();
      chain(s, k - 1, xv);
      out.middle_edges[v][page] = g.add_edge(xv, yv, 1);
      chain(yv, k - 1, t);
      x[i][page] = xv;
      y[i][page] = yv;
    }
    chain(s, 2 * k, t);  // P_{2k+1}
    s = t;
  }
  g.set_label(out.gadget_t.back(), "t");

  const std::size_t before = g.vertex_count();
  for (const Edge& e : in.edges()) {
    std::size_t i = pos[e.u];
    std::size_t j = pos[e.v];
    if (i > j) std::swap(i, j);
    const int page = emb.pages.at(edge_key(e.u, e.v)) == Page::upper ? 0 : 1;
    const auto length = (2 * k - 1) * static_cast<std::int64_t>(j - i) - 2;
    chain(y[i][page], length, x[j][page]);
  }
  out.connector_interior = g.vertex_count() - before;

  std::int64_t ell_prime = k * (2 * k) + (static_cast<std::int64_t>(n) - k) * (2 * k - 1);
  const Vertex src = out.gadget_s.front();
  const Vertex dst = out.gadget_t.back();
  if (opts.simple) {
    // A middle edge becomes one length-2 path; keep its first half.
    const Subdivision sub = subdivide_with_map(g);
    for (auto& pair : out.middle_edges) pair = {sub.copies[pair[0]][0], sub.copies[pair[1]][0]};
    ell_prime *= 2;
    out.instance = make_lbec(sub.graph, src, dst, k_prime, ell_prime);
  } else {
    out.instance = make_lbec(std::move(g), src, dst, k_prime, ell_prime);
  }
  return out;
}

/// Expected vertex count of the weighted reduction: n gadgets of 6k-3
/// vertices, n-1 merges, plus connector interiors.
inline std::size_t expected_reduction_vertices(const Graph& in, const TwoPageEmbedding& emb, std::int64_t k) {
  const auto pos = spine_positions(in, emb);
  const auto n = static_cast<std::int64_t>(in.vertex_count());
  std::int64_t total = n * (6 * k - 3) - (n - 1);
  for (const Edge& e : in.edges()) {
    const auto gap = static_cast<std::int64_t>(pos[e.u] > pos[e.v] ? pos[e.u] - pos[e.v] : pos[e.v] - pos[e.u]);
    total += (2 * k - 1) * gap - 3;
  }
  return static_cast<std::size_t>(total);
}

}  // namespace tfractal
