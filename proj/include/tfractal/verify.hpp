#pragma once

// Property suites behind `tfractal verify`. Each check recomputes its
// expectation from graph primitives (BFS, components, flow) rather than from
// the structure it is checking.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tfractal/algorithms.hpp"
#include "tfractal/composer.hpp"
#include "tfractal/fractal.hpp"
#include "tfractal/generators.hpp"
#include "tfractal/reducer.hpp"
#include "tfractal/solvers.hpp"

namespace tfractal {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

/// Calls fn(removed, size) for every edge subset of size <= max_size.
inline void for_each_subset(std::size_t m, std::size_t max_size, const std::function<void(const EdgeMask&, std::size_t)>& fn) {
  EdgeMask mask(m, false);
  auto rec = [&](auto&& self, std::size_t from, std::size_t size) -> void {
    fn(mask, size);
    if (size == max_size) return;
    for (std::size_t e = from; e < m; ++e) {
      mask[e] = true;
      self(self, e + 1, size + 1);
      mask[e] = false;
    }
  };
  rec(rec, 0, 0);
}

/// True iff the edge ids form a simple sigma-tau path in the fractal.
inline bool is_sigma_tau_path(const TFractal& f, const std::vector<EdgeId>& ids) {
  Vertex at = f.sigma;
  std::vector<bool> seen(f.graph.vertex_count(), false);
  seen[at] = true;
  for (EdgeId e : ids) {
    const Edge& edge = f.graph.edge(e);
    if (edge.u != at && (f.graph.directed() || edge.v != at)) return false;
    at = edge.u == at ? edge.v : edge.u;
    if (seen[at]) return false;
    seen[at] = true;
  }
  return at == f.tau;
}

inline bool disconnects(const Graph& g, Vertex s, Vertex t, const EdgeMask& removed) {
  return !bfs_distance(g, s, t, removed).has_value();
}

class Checker {
 public:
  explicit Checker(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (!ok && first_failure_.empty()) first_failure_ = what;
    failed_ += ok ? 0 : 1;
  }

  CheckResult result() const {
    CheckResult r{name_, failed_ == 0, {}};
    std::ostringstream os;
    if (failed_ == 0) {
      os << checked_ << " checks";
    } else {
      os << failed_ << "/" << checked_ << " failed, first: " << first_failure_;
    }
    r.detail = os.str();
    return r;
  }

 private:
  std::string name_;
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::string first_failure_;
};

}  // namespace detail

inline CheckResult check_fractal_counts(std::size_t q_max) {
  detail::Checker c("fractal counts and boundaries");
  for (std::size_t q = 0; q <= q_max; ++q) {
    const TFractal f = build_fractal(q);
    const std::string at = "q=" + std::to_string(q);
    const std::size_t p = std::size_t{1} << q;
    c.expect(f.graph.vertex_count() == p + 1, at + " vertex count");
    c.expect(f.graph.edge_count() == 2 * p - 1, at + " edge count");
    if (q > 0) c.expect(f.graph.max_degree() == 2 * q, at + " max degree");
    c.expect(f.boundaries.size() == q + 1, at + " boundary count");
    std::vector<int> owner(f.graph.edge_count(), 0);
    for (std::size_t i = 0; i <= q; ++i) {
      c.expect(f.boundaries[i].size() == (std::size_t{1} << i), at + " |B_" + std::to_string(i) + "|");
      c.expect(detail::is_sigma_tau_path(f, f.boundaries[i]), at + " B_" + std::to_string(i) + " is a path");
      for (EdgeId e : f.boundaries[i]) ++owner[e];
    }
    c.expect(std::all_of(owner.begin(), owner.end(), [](int n) { return n == 1; }), at + " boundaries partition E");
    c.expect(is_connected(f.graph), at + " connected");
  }
  return c.result();
}

inline CheckResult check_min_cuts(std::size_t q_max) {
  detail::Checker c("minimum cuts and dual tree");
  for (std::size_t q = 0; q <= q_max; ++q) {
    const TFractal f = build_fractal(q);
    const std::string at = "q=" + std::to_string(q);
    const auto cuts = enumerate_min_cuts(f);
    c.expect(cuts.size() == (std::size_t{1} << q), at + " cut count");
    c.expect(min_cut(f.graph, f.sigma, f.tau).total_cost == static_cast<Cost>(q + 1), at + " max-flow value");
    std::vector<std::vector<EdgeId>> seen;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
      const auto& cut = cuts[i].edges;
      c.expect(cut.size() == q + 1, at + " cut size");
      for (const auto& b : f.boundaries) {
        c.expect(std::count_if(cut.begin(), cut.end(),
                               [&](EdgeId e) { return std::find(b.begin(), b.end(), e) != b.end(); }) == 1,
                 at + " one edge per boundary");
      }
      const EdgeMask mask = mask_of(f.graph.edge_count(), cut);
      c.expect(detail::disconnects(f.graph, f.sigma, f.tau, mask), at + " cut disconnects");
      for (EdgeId e : cut) {
        EdgeMask less = mask;
        less[e] = false;
        c.expect(!detail::disconnects(f.graph, f.sigma, f.tau, less), at + " cut is minimal");
      }
      seen.push_back(cut);
    }
    std::sort(seen.begin(), seen.end());
    c.expect(std::adjacent_find(seen.begin(), seen.end()) == seen.end(), at + " cuts distinct");
    // Selector: gap i has v_{i-1} on sigma's side and v_i on tau's.
    for (std::size_t i = 1; i <= f.instance_count(); ++i) {
      const auto cut = cut_for_instance(f, i);
      const auto comp = components(f.graph, mask_of(f.graph.edge_count(), cut.edges));
      c.expect(comp[i - 1] == comp[f.sigma] && comp[i] == comp[f.tau], at + " gap " + std::to_string(i) + " sides");
      c.expect(selected_instance(f, cut) == i, at + " selector inverse");
    }
  }
  return c.result();
}

/// dist(sigma, x) + dist(y, tau) = q, {x, y} the last-boundary edge of the cut.
inline CheckResult check_distance_split(std::size_t q_max) {
  detail::Checker c("distance split");
  for (std::size_t q = 0; q <= q_max; ++q) {
    const TFractal f = build_fractal(q);
    for (const auto& cut : enumerate_min_cuts(f)) {
      const EdgeMask mask = mask_of(f.graph.edge_count(), cut.edges);
      const auto comp = components(f.graph, mask);
      const auto& bq = f.boundaries.back();
      const auto it = std::find_if(cut.edges.begin(), cut.edges.end(),
                                   [&](EdgeId e) { return std::find(bq.begin(), bq.end(), e) != bq.end(); });
      c.expect(it != cut.edges.end(), "cut meets the last boundary");
      if (it == cut.edges.end()) continue;
      const Edge& last = f.graph.edge(*it);
      const Vertex x = comp[last.u] == comp[f.sigma] ? last.u : last.v;
      const Vertex y = x == last.u ? last.v : last.u;
      const auto a = bfs_distance(f.graph, f.sigma, x, mask);
      const auto b = bfs_distance(f.graph, y, f.tau, mask);
      c.expect(a && b && *a + *b == q, "q=" + std::to_string(q) + " split");
    }
  }
  return c.result();
}

/// If D is not a sigma-tau cut, dist(sigma, tau) <= |D| + 1 in the fractal minus D.
inline CheckResult check_short_path(std::size_t q_max, std::size_t samples = 2000, std::uint64_t seed = 1) {
  detail::Checker c("short path");
  for (std::size_t q = 0; q <= std::min<std::size_t>(q_max, 3); ++q) {
    const TFractal f = build_fractal(q);
    detail::for_each_subset(f.graph.edge_count(), 4, [&](const EdgeMask& d, std::size_t size) {
      const auto dist = bfs_distance(f.graph, f.sigma, f.tau, d);
      c.expect(!dist || *dist <= size + 1, "q=" + std::to_string(q) + " |D|=" + std::to_string(size));
    });
  }
  if (q_max >= 4) {
    const TFractal f = build_fractal(4);
    Rng rng(seed);
    const std::size_t m = f.graph.edge_count();
    std::uniform_int_distribution<std::size_t> size_of(0, m);
    std::vector<EdgeId> ids(m);
    for (EdgeId e = 0; e < m; ++e) ids[e] = e;
    for (std::size_t s = 0; s < samples; ++s) {
      std::shuffle(ids.begin(), ids.end(), rng);
      const std::size_t size = size_of(rng);
      const EdgeMask d = mask_of(m, std::span<const EdgeId>(ids.data(), size));
      const auto dist = bfs_distance(f.graph, f.sigma, f.tau, d);
      c.expect(!dist || *dist <= size + 1, "q=4 sample " + std::to_string(s));
    }
  }
  return c.result();
}

/// (A) connected after removing D: dist(sigma, x) <= q + |D| + 1.
/// (B) exactly two components splitting sigma and tau: every x is within
/// q + |D| - 1 of its own terminal.
inline CheckResult check_connectivity_bounds(std::size_t q_max) {
  detail::Checker c("connectivity distance bounds");
  for (std::size_t q = 0; q <= std::min<std::size_t>(q_max, 4); ++q) {
    const TFractal f = build_fractal(q);
    detail::for_each_subset(f.graph.edge_count(), 3, [&](const EdgeMask& d, std::size_t size) {
      const std::string at = "q=" + std::to_string(q) + " |D|=" + std::to_string(size);
      const auto from_sigma = bfs_distances(f.graph, f.sigma, d);
      const auto count = component_count(f.graph, d);
      if (count == 1) {
        const auto bound = q + size + 1;
        c.expect(std::all_of(from_sigma.begin(), from_sigma.end(), [&](std::size_t x) { return x <= bound; }), at + " (A)");
      } else if (count == 2 && from_sigma[f.tau] == unreachable) {
        const auto from_tau = bfs_distances(f.graph, f.tau, d);
        const auto bound = q + size - 1;
        bool ok = true;
        for (Vertex x = 0; x < f.graph.vertex_count(); ++x) ok = ok && std::min(from_sigma[x], from_tau[x]) <= bound;
        c.expect(ok, at + " (B)");
      }
    });
  }
  return c.result();
}

inline CheckResult check_directed(std::size_t q_max) {
  detail::Checker c("directed fractal");
  for (std::size_t q = 0; q <= q_max; ++q) {
    const TFractal f = build_fractal(q, true);
    const std::string at = "q=" + std::to_string(q);
    c.expect(is_acyclic(f.graph), at + " acyclic");
    c.expect(f.graph.in(f.sigma).empty() && f.graph.out(f.sigma).size() == q + 1, at + " sigma degrees");
    c.expect(f.graph.out(f.tau).empty() && f.graph.in(f.tau).size() == q + 1, at + " tau degrees");
    c.expect(q == 0 || !is_strongly_connected(f.graph), at + " not strongly connected");
  }
  for (std::size_t q = 0; q <= std::min<std::size_t>(q_max, 4); ++q) {
    const TFractal f = build_fractal(q, true);
    detail::for_each_subset(f.graph.edge_count(), 3, [&](const EdgeMask& d, std::size_t size) {
      const auto dist = bfs_distances(f.graph, f.sigma, d);
      const auto bound = q + size + 1;
      c.expect(std::all_of(dist.begin(), dist.end(), [&](std::size_t x) { return x == unreachable || x <= bound; }),
               "q=" + std::to_string(q) + " reachability bound");
    });
  }
  return c.result();
}

/// The iterative and recursive definitions give the same labeled graph and
/// the same boundaries.
inline CheckResult check_recursive_form(std::size_t q_max) {
  detail::Checker c("recursive construction");
  auto pairs = [](const Graph& g, const std::vector<EdgeId>& ids) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (EdgeId e : ids) out.emplace_back(g.edge(e).u, g.edge(e).v);
    std::sort(out.begin(), out.end());
    return out;
  };
  for (bool directed : {false, true}) {
    for (std::size_t q = 0; q <= q_max; ++q) {
      const TFractal f = build_fractal(q, directed);
      auto [g, boundaries] = build_fractal_recursive(q, directed);
      std::vector<EdgeId> all(g.edge_count());
      for (EdgeId e = 0; e < all.size(); ++e) all[e] = e;
      std::vector<EdgeId> mine(f.graph.edge_count());
      for (EdgeId e = 0; e < mine.size(); ++e) mine[e] = e;
      const std::string at = "q=" + std::to_string(q) + (directed ? " directed" : "");
      c.expect(g.vertex_count() == f.graph.vertex_count() && pairs(g, all) == pairs(f.graph, mine), at + " edges");
      bool same = boundaries.size() == f.boundaries.size();
      for (std::size_t i = 0; same && i < boundaries.size(); ++i) {
        auto b = boundaries[i];
        std::sort(b.begin(), b.end());
        same = b == pairs(f.graph, f.boundaries[i]);
      }
      c.expect(same, at + " boundaries");
    }
  }
  return c.result();
}

inline std::vector<CheckResult> verify_lemmas(std::size_t q_max) {
  return {check_fractal_counts(q_max),      check_min_cuts(q_max),    check_distance_split(q_max),
          check_short_path(q_max),          check_connectivity_bounds(q_max), check_directed(q_max),
          check_recursive_form(q_max)};
}

/// Seeded OR checks: the composed verdict (cost-aware brute force) against
/// the OR of the inputs' brute-force verdicts.
inline std::vector<CheckResult> verify_compositions(std::uint64_t seed = 7, int trials = 6) {
  struct Case {
    std::string name;
    InputShape shape;
    std::size_t p;
    std::int64_t k_max;
    std::function<CompositionArtifact(const std::vector<ProblemInstance>&)> compose;
  };
  const std::vector<Case> cases = {
      {"compose lbec p=2", InputShape::undirected, 2, 2, [](const auto& in) { return compose_lbec(in); }},
      {"compose lbec p=4", InputShape::undirected, 4, 2, [](const auto& in) { return compose_lbec(in); }},
      {"compose lbec dag p=2", InputShape::dag, 2, 2, [](const auto& in) { return compose_lbec(in); }},
      {"compose dsct p=2", InputShape::dag, 2, 2, [](const auto& in) { return compose_dsct(in); }},
      {"compose mded p=2", InputShape::connected, 2, 1, [](const auto& in) { return compose_mded(in, false); }},
      {"compose mded directed p=2", InputShape::dag_reach, 2, 1,
       [](const auto& in) { return compose_mded(in, true); }},
  };
  std::vector<CheckResult> out;
  for (const Case& cs : cases) {
    detail::Checker c(cs.name);
    Rng rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
      const std::int64_t k = std::uniform_int_distribution<std::int64_t>(0, cs.k_max)(rng);
      const std::int64_t ell = std::uniform_int_distribution<std::int64_t>(3, 4)(rng);
      std::vector<ProblemInstance> inputs;
      bool any = false;
      for (std::size_t i = 0; i < cs.p; ++i) {
        inputs.push_back(random_lbec_input(rng, 5, k, ell, cs.shape));
        BruteForceOptions opts;
        opts.keep_connected = cs.shape == InputShape::connected;
        any = any || solve_bruteforce(inputs.back(), opts).answer;
      }
      const auto art = cs.compose(inputs);
      c.expect(solve_bruteforce(art.composed).answer == any, "trial " + std::to_string(trial));
    }
    out.push_back(c.result());
  }
  return out;
}

/// Built-in two-page-embedded graphs: P_3, C_4, K_4, K_{1,3}, the triangular
/// prism and a paw (triangle with a pendant).
inline std::vector<std::pair<std::string, std::pair<Graph, TwoPageEmbedding>>> builtin_vc_fixtures() {
  auto make = [](std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges, std::vector<Vertex> order,
                 std::vector<Page> pages) {
    Graph g(n);
    TwoPageEmbedding emb;
    emb.order = std::move(order);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      g.add_edge(edges[i].first, edges[i].second);
      emb.pages[edge_key(edges[i].first, edges[i].second)] = pages[i];
    }
    return std::pair{std::move(g), std::move(emb)};
  };
  constexpr Page U = Page::upper;
  constexpr Page L = Page::lower;
  return {
      {"P3", make(3, {{0, 1}, {1, 2}}, {0, 1, 2}, {U, U})},
      {"C4", make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {0, 1, 2, 3}, {U, U, U, L})},
      {"K4", make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}, {0, 1, 2, 3}, {U, U, U, U, L, U})},
      {"K13", make(4, {{0, 1}, {0, 2}, {0, 3}}, {0, 1, 2, 3}, {U, U, U})},
      {"prism", make(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}, {0, 1, 2, 3, 5, 4},
                     {U, U, U, U, U, U, U, L, L})},
      {"paw", make(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}, {0, 1, 2, 3}, {U, U, U, U})},
  };
}

inline std::vector<CheckResult> verify_reductions() {
  std::vector<CheckResult> out;
  for (const auto& [name, fixture] : builtin_vc_fixtures()) {
    const auto& [g, emb] = fixture;
    detail::Checker c("reduce " + name);
    c.expect(validate_embedding(g, emb), "embedding valid");
    for (std::int64_t k = 2; k <= 3; ++k) {
      const std::string at = "k=" + std::to_string(k);
      const VcInstance vc{g, k};
      const auto red = reduce_vc_to_planar_lbec(vc, emb);
      const auto n = static_cast<std::int64_t>(g.vertex_count());
      c.expect(red.instance.k == 2 * k, at + " k'");
      c.expect(red.instance.ell == k * 2 * k + (n - k) * (2 * k - 1), at + " ell'");
      c.expect(red.instance.graph.vertex_count() == expected_reduction_vertices(g, emb, k), at + " vertex count");
      c.expect(solve_lbec_fpt(red.instance).answer == solve_vc_bruteforce(vc), at + " verdict");
    }
    out.push_back(c.result());
  }
  return out;
}

}  // namespace tfractal
