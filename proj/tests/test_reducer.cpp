#include <gtest/gtest.h>

#include <random>

#include "fixture_graphs.hpp"
#include "oracles.hpp"
#include "tfractal/tfractal.hpp"

using namespace tfractal;

namespace {

TwoPageEmbedding embedding(std::vector<Vertex> order, std::vector<std::pair<std::pair<Vertex, Vertex>, Page>> pages) {
  TwoPageEmbedding emb;
  emb.order = std::move(order);
  for (auto& [key, page] : pages) emb.pages[edge_key(key.first, key.second)] = page;
  return emb;
}

Graph path3() {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  return g;
}

// Vertex cover by a second exhaustive pass: increasing size, then all
// subsets of that size via next_permutation.
bool oracle_vc(const Graph& g, std::int64_t k) {
  const std::size_t n = g.vertex_count();
  for (std::size_t size = 0; size <= std::min<std::size_t>(n, static_cast<std::size_t>(std::max<std::int64_t>(k, 0)));
       ++size) {
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(size), pick.end(), true);
    do {
      bool covers = true;
      for (const Edge& e : g.edges()) covers = covers && (pick[e.u] || pick[e.v]);
      if (covers) return true;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return false;
}

}  // namespace

TEST(Embedding, CycleOfFour) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(0, 3);
  const auto emb = embedding({0, 1, 2, 3},
                             {{{0, 1}, Page::upper}, {{1, 2}, Page::upper}, {{2, 3}, Page::upper}, {{0, 3}, Page::lower}});
  EXPECT_TRUE(validate_embedding(g, emb));
}

TEST(Embedding, K4OnOnePageCrosses) {
  Graph g(4);
  std::vector<std::pair<std::pair<Vertex, Vertex>, Page>> pages;
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) {
      g.add_edge(u, v);
      pages.push_back({{u, v}, Page::upper});
    }
  }
  EXPECT_FALSE(validate_embedding(g, embedding({0, 1, 2, 3}, pages)));
  // Moving {1,3} to the other page resolves the only crossing pair.
  pages[4].second = Page::lower;
  EXPECT_TRUE(validate_embedding(g, embedding({0, 1, 2, 3}, pages)));
}

TEST(Embedding, SingleEdgeAnyOrder) {
  Graph g(2);
  g.add_edge(0, 1);
  EXPECT_TRUE(validate_embedding(g, embedding({1, 0}, {{{0, 1}, Page::lower}})));
  EXPECT_TRUE(validate_embedding(g, embedding({0, 1}, {{{0, 1}, Page::upper}})));
}

TEST(Embedding, RejectsBadOrdersAndMissingPages) {
  const Graph g = path3();
  EXPECT_FALSE(validate_embedding(g, embedding({0, 1}, {{{0, 1}, Page::upper}, {{1, 2}, Page::upper}})));
  EXPECT_FALSE(validate_embedding(g, embedding({0, 1, 1}, {{{0, 1}, Page::upper}, {{1, 2}, Page::upper}})));
  EXPECT_FALSE(validate_embedding(g, embedding({0, 1, 2}, {{{0, 1}, Page::upper}})));
}

TEST(VertexCover, Triangle) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(0, 2);
  EXPECT_FALSE(solve_vc_bruteforce({g, 1}));
  EXPECT_TRUE(solve_vc_bruteforce({g, 2}));
}

TEST(VertexCover, Star) {
  Graph g(4);
  for (Vertex v = 1; v < 4; ++v) g.add_edge(0, v);
  EXPECT_TRUE(solve_vc_bruteforce({g, 1}));
}

TEST(VertexCover, AgreesWithSecondPass) {
  Rng rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = random_graph(rng, 6, 0.4);
    for (std::int64_t k = 0; k <= 4; ++k) EXPECT_EQ(solve_vc_bruteforce({g, k}), oracle_vc(g, k));
  }
}

TEST(VertexCover, SizeLimit) { EXPECT_THROW(solve_vc_bruteforce({Graph(21), 1}), resource_error); }

TEST(Reduce, Parameters) {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  const auto emb = embedding({0, 1, 2, 3}, {{{0, 1}, Page::upper}, {{1, 2}, Page::upper}, {{2, 3}, Page::upper}});
  const auto red = reduce_vc_to_planar_lbec({g, 2}, emb);
  EXPECT_EQ(red.instance.k, 4);
  EXPECT_EQ(red.instance.ell, 14);
}

TEST(Reduce, AdjacentConnectorHasLengthOne) {
  Graph g(2);
  g.add_edge(0, 1);
  const auto emb = embedding({0, 1}, {{{0, 1}, Page::upper}});
  const auto red = reduce_vc_to_planar_lbec({g, 2}, emb);
  EXPECT_EQ(red.connector_interior, 0u);
  // The connector is a single edge from y of the first gadget to x of the
  // second on the upper page.
  const Graph& out = red.instance.graph;
  const Edge& y1 = out.edge(red.middle_edges[0][0]);
  const Edge& x2 = out.edge(red.middle_edges[1][0]);
  EXPECT_EQ(oracle::distance(out, y1.v, x2.u), 1);
}

TEST(Reduce, PathOfThree) {
  const Graph g = path3();
  const auto emb = embedding({0, 1, 2}, {{{0, 1}, Page::upper}, {{1, 2}, Page::upper}});
  for (std::int64_t k = 2; k <= 3; ++k) {
    const auto red = reduce_vc_to_planar_lbec({g, k}, emb);
    const bool vc = oracle_vc(g, k);
    EXPECT_TRUE(vc);
    EXPECT_EQ(solve_lbec_fpt(red.instance).answer, vc);
    EXPECT_EQ(solve_bruteforce(red.instance).answer, vc);
  }
}

TEST(Reduce, EdgelessGraph) {
  // No edges: VC is trivially yes, and so is the reduced instance.
  const Graph g(3);
  const auto emb = embedding({0, 1, 2}, {});
  const auto red = reduce_vc_to_planar_lbec({g, 2}, emb);
  EXPECT_TRUE(solve_bruteforce(red.instance).answer);
}

TEST(Reduce, NoInstance) {
  // K_4 needs a cover of size 3 > k = 2.
  Graph g(4);
  std::vector<std::pair<std::pair<Vertex, Vertex>, Page>> pages;
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) {
      g.add_edge(u, v);
      pages.push_back({{u, v}, u == 1 && v == 3 ? Page::lower : Page::upper});
    }
  }
  const auto red = reduce_vc_to_planar_lbec({g, 2}, embedding({0, 1, 2, 3}, pages));
  EXPECT_FALSE(oracle_vc(g, 2));
  EXPECT_FALSE(solve_lbec_fpt(red.instance).answer);
  EXPECT_TRUE(solve_lbec_fpt(reduce_vc_to_planar_lbec({g, 3}, embedding({0, 1, 2, 3}, pages)).instance).answer);
}

TEST(Reduce, Preconditions) {
  const Graph g = path3();
  const auto emb = embedding({0, 1, 2}, {{{0, 1}, Page::upper}, {{1, 2}, Page::upper}});
  EXPECT_THROW(reduce_vc_to_planar_lbec({g, 1}, emb), input_error);
  EXPECT_THROW(reduce_vc_to_planar_lbec({g, 2}, embedding({0, 1, 2}, {{{0, 1}, Page::upper}})), input_error);
  Graph star(5);
  for (Vertex v = 1; v < 5; ++v) star.add_edge(0, v);
  EXPECT_THROW(reduce_vc_to_planar_lbec({star, 2}, embedding({0, 1, 2, 3, 4}, {})), input_error);
}

TEST(Reduce, UnitCostsWouldMakeEveryInstanceYes) {
  // Without the heavy non-middle edges, cutting the three paths leaving the
  // first gadget's s costs 3 <= k' and disconnects s from t.
  Graph g(4);
  std::vector<std::pair<std::pair<Vertex, Vertex>, Page>> pages;
  for (Vertex u = 0; u < 4; ++u) {
    for (Vertex v = u + 1; v < 4; ++v) {
      g.add_edge(u, v);
      pages.push_back({{u, v}, u == 1 && v == 3 ? Page::lower : Page::upper});
    }
  }
  const auto red = reduce_vc_to_planar_lbec({g, 2}, embedding({0, 1, 2, 3}, pages));
  const Graph& out = red.instance.graph;
  Graph unit(out.vertex_count());
  for (const Edge& e : out.edges()) unit.add_edge(e.u, e.v);
  const auto plain = make_lbec(unit, *red.instance.s, *red.instance.t, red.instance.k, red.instance.ell);
  std::vector<EdgeId> around_s;
  for (const auto& inc : unit.out(*plain.s)) around_s.push_back(inc.edge);
  EXPECT_EQ(around_s.size(), 3u);
  EXPECT_TRUE(replay(plain, around_s));
  EXPECT_FALSE(solve_lbec_fpt(red.instance).answer);
}

TEST(Reduce, OnlyMiddleEdgesInMinimalWitnesses) {
  for (int n = 4; n <= 5; ++n) {
    for (const auto& fx : fixtures::planar_cubic_fixtures(n)) {
      const auto red = reduce_vc_to_planar_lbec({fx.graph, 2}, fx.embedding);
      const auto v = solve_lbec_fpt(red.instance);
      if (!v.answer) continue;
      std::set<EdgeId> middle;
      for (const auto& pair : red.middle_edges) middle.insert(pair.begin(), pair.end());
      for (EdgeId e : v.witness) EXPECT_TRUE(middle.count(e)) << "edge " << e;
    }
  }
}

TEST(Reduce, VertexCountsMatchConstruction) {
  for (int n = 4; n <= 6; ++n) {
    for (const auto& fx : fixtures::planar_cubic_fixtures(n)) {
      for (std::int64_t k = 2; k <= 4; ++k) {
        const auto red = reduce_vc_to_planar_lbec({fx.graph, k}, fx.embedding);
        const auto pos = spine_positions(fx.graph, fx.embedding);
        // Gadgets share terminals: n(6k - 3) - (n - 1), plus connector interiors.
        std::size_t interior = 0;
        for (const Edge& e : fx.graph.edges()) {
          const auto gap = static_cast<std::int64_t>(std::max(pos[e.u], pos[e.v]) - std::min(pos[e.u], pos[e.v]));
          interior += static_cast<std::size_t>((2 * k - 1) * gap - 3);
        }
        EXPECT_EQ(red.connector_interior, interior);
        EXPECT_EQ(red.instance.graph.vertex_count(),
                  static_cast<std::size_t>(n * (6 * k - 3) - (n - 1)) + interior);
        EXPECT_EQ(red.instance.graph.vertex_count(), expected_reduction_vertices(fx.graph, fx.embedding, k));
      }
    }
  }
}

TEST(Reduce, SoundnessOnSmallFixtures) {
  for (int n = 4; n <= 5; ++n) {
    for (const auto& fx : fixtures::planar_cubic_fixtures(n)) {
      for (std::int64_t k = 2; k <= 3; ++k) {
        const auto red = reduce_vc_to_planar_lbec({fx.graph, k}, fx.embedding);
        EXPECT_EQ(solve_lbec_fpt(red.instance).answer, oracle_vc(fx.graph, k));
      }
    }
  }
}

TEST(Reduce, SimpleModeAgrees) {
  for (const auto& fx : fixtures::planar_cubic_fixtures(4)) {
    ReduceOptions simple;
    simple.simple = true;
    const auto w = reduce_vc_to_planar_lbec({fx.graph, 2}, fx.embedding);
    const auto s = reduce_vc_to_planar_lbec({fx.graph, 2}, fx.embedding, simple);
    EXPECT_TRUE(s.instance.graph.is_simple());
    EXPECT_EQ(s.instance.ell, 2 * w.instance.ell);
    EXPECT_EQ(solve_lbec_fpt(s.instance).answer, solve_lbec_fpt(w.instance).answer);
  }
}

TEST(Reduce, DirectedVariantIsAcyclic) {
  for (const auto& fx : fixtures::planar_cubic_fixtures(4)) {
    ReduceOptions directed;
    directed.directed = true;
    const auto d = reduce_vc_to_planar_lbec({fx.graph, 2}, fx.embedding, directed);
    EXPECT_TRUE(is_acyclic(d.instance.graph));
    EXPECT_EQ(solve_lbec_fpt(d.instance).answer, oracle_vc(fx.graph, 2));
  }
}

TEST(Fixtures, EnumerationCounts) {
  // Connected graphs with max degree 3: 6 on four vertices, 10 on five,
  // 29 on six of which K_{3,3} is not planar.
  EXPECT_EQ(fixtures::planar_cubic_fixtures(4).size(), 6u);
  EXPECT_EQ(fixtures::planar_cubic_fixtures(5).size(), 10u);
  EXPECT_EQ(fixtures::planar_cubic_fixtures(6).size(), 28u);
}
