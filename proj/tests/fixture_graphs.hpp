#pragma once

// Connected graphs of maximum degree <= 3 up to isomorphism, each with a
// two-page embedding found by search.

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "tfractal/tfractal.hpp"

namespace fixtures {

using tfractal::Graph;
using tfractal::Page;
using tfractal::TwoPageEmbedding;
using tfractal::Vertex;

using EdgeList = std::vector<std::pair<int, int>>;

inline EdgeList canonical_form(int n, const EdgeList& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  bool first = true;
  do {
    EdgeList mapped;
    for (auto [u, v] : edges) {
      int a = perm[u], b = perm[v];
      if (a > b) std::swap(a, b);
      mapped.emplace_back(a, b);
    }
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = mapped;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline Graph to_graph(int n, const EdgeList& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

/// Two-coloring of the crossing graph for some spine order, or nullopt.
inline std::optional<TwoPageEmbedding> find_embedding(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  const auto edges = g.edges();
  do {
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    const std::size_t m = edges.size();
    std::vector<std::vector<std::size_t>> conflict(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        auto a = std::minmax(pos[edges[i].u], pos[edges[i].v]);
        auto b = std::minmax(pos[edges[j].u], pos[edges[j].v]);
        const bool cross = (a.first < b.first && b.first < a.second && a.second < b.second) ||
                           (b.first < a.first && a.first < b.second && b.second < a.second);
        if (cross) {
          conflict[i].push_back(j);
          conflict[j].push_back(i);
        }
      }
    }
    std::vector<int> color(m, -1);
    bool ok = true;
    for (std::size_t start = 0; start < m && ok; ++start) {
      if (color[start] != -1) continue;
      color[start] = 0;
      std::vector<std::size_t> stack{start};
      while (!stack.empty() && ok) {
        const std::size_t e = stack.back();
        stack.pop_back();
        for (std::size_t f : conflict[e]) {
          if (color[f] == -1) {
            color[f] = 1 - color[e];
            stack.push_back(f);
          } else if (color[f] == color[e]) {
            ok = false;
          }
        }
      }
    }
    if (!ok) continue;
    TwoPageEmbedding emb;
    emb.order = order;
    for (std::size_t i = 0; i < m; ++i) {
      emb.pages[tfractal::edge_key(edges[i].u, edges[i].v)] = color[i] == 0 ? Page::upper : Page::lower;
    }
    return emb;
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

struct Fixture {
  Graph graph;
  TwoPageEmbedding embedding;
};

/// All connected graphs with n vertices and maximum degree <= 3 that have a
/// two-page embedding (for these sizes: the planar ones), one per
/// isomorphism class.
inline std::vector<Fixture> planar_cubic_fixtures(int n) {
  EdgeList all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  std::set<EdgeList> seen;
  std::vector<Fixture> out;
  const std::size_t total = all.size();
  for (std::uint32_t mask = 0; mask < (1U << total); ++mask) {
    EdgeList edges;
    std::vector<int> deg(n, 0);
    bool ok = true;
    for (std::size_t i = 0; i < total && ok; ++i) {
      if (!((mask >> i) & 1U)) continue;
      edges.push_back(all[i]);
      ok = ++deg[all[i].first] <= 3 && ++deg[all[i].second] <= 3;
    }
    if (!ok) continue;
    Graph g = to_graph(n, edges);
    if (!tfractal::is_connected(g)) continue;
    auto canon = canonical_form(n, edges);
    if (!seen.insert(canon).second) continue;
    Graph cg = to_graph(n, canon);
    auto emb = find_embedding(cg);
    if (!emb) continue;
    out.push_back(Fixture{std::move(cg), std::move(*emb)});
  }
  return out;
}

}  // namespace fixtures
