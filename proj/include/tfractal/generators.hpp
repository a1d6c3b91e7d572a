#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tfractal/algorithms.hpp"
#include "tfractal/graph.hpp"
#include "tfractal/instance.hpp"

namespace tfractal {

using Rng = std::mt19937_64;

/// G(n, p) without parallel edges. Directed graphs draw each ordered pair.
inline Graph random_graph(Rng& rng, std::size_t n, double p, bool directed = false) {
  std::bernoulli_distribution coin(p);
  Graph g(n, directed);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = directed ? 0 : u + 1; v < n; ++v) {
      if (u != v && coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

/// Random DAG: arcs only from smaller to larger id.
inline Graph random_dag(Rng& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n, true);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

enum class InputShape {
  undirected,  // any undirected graph with s != t
  connected,   // connected undirected graph
  dag,         // DAG with s = 0, t = n-1
  dag_reach,   // DAG where s reaches every vertex and every vertex reaches t
};

/// Random non-bad LBEC input of the given shape and class (k, ell), with
/// 3 <= n <= n_max vertices. Draws until the shape's conditions hold.
inline ProblemInstance random_lbec_input(Rng& rng, std::size_t n_max, std::int64_t k, std::int64_t ell,
                                         InputShape shape) {
  std::uniform_int_distribution<std::size_t> size(3, std::max<std::size_t>(3, n_max));
  std::uniform_real_distribution<double> density(0.35, 0.8);
  for (;;) {
    const std::size_t n = size(rng);
    const double p = density(rng);
    ProblemInstance inst;
    if (shape == InputShape::dag || shape == InputShape::dag_reach) {
      inst = make_lbec(random_dag(rng, n, p), 0, n - 1, k, ell);
    } else {
      std::uniform_int_distribution<Vertex> pick(0, n - 1);
      const Vertex s = pick(rng);
      const Vertex t = pick(rng);
      if (s == t) continue;
      inst = make_lbec(random_graph(rng, n, p), s, t, k, ell);
    }
    if (is_bad(inst)) continue;
    if (shape == InputShape::connected && !is_connected(inst.graph)) continue;
    if (shape == InputShape::dag_reach) {
      const auto from = bfs_distances(inst.graph, *inst.s);
      const auto to = bfs_distances_to(inst.graph, *inst.t);
      bool ok = true;
      for (Vertex v = 0; v < n; ++v) ok = ok && from[v] != unreachable && to[v] != unreachable;
      if (!ok) continue;
    }
    return inst;
  }
}

}  // namespace tfractal
