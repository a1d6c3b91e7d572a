#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tfractal/algorithms.hpp"
#include "tfractal/fractal.hpp"
#include "tfractal/graph.hpp"
#include "tfractal/instance.hpp"

namespace tfractal {

/// Inputs are R-equivalent iff they share (k, ell) or are both bad.
struct EquivalenceClass {
  std::int64_t k = 0;
  std::int64_t ell = 0;
  bool bad = false;

  friend bool operator==(const EquivalenceClass&, const EquivalenceClass&) = default;
};

inline EquivalenceClass class_of(const ProblemInstance& inst) {
  if (is_bad(inst)) return EquivalenceClass{0, 0, true};
  return EquivalenceClass{inst.k, inst.ell, false};
}

inline EquivalenceClass check_equivalent(const std::vector<ProblemInstance>& instances) {
  if (instances.empty()) throw input_error("no instances given");
  const EquivalenceClass first = class_of(instances.front());
  for (std::size_t i = 1; i < instances.size(); ++i) {
    if (instances[i].kind != instances.front().kind) {
      throw equivalence_error("instances 1 and " + std::to_string(i + 1) + " are of different problem kinds");
    }
    if (class_of(instances[i]) != first) {
      throw equivalence_error("instances 1 and " + std::to_string(i + 1) + " are not R-equivalent");
    }
  }
  return first;
}

inline bool is_power_of_two(std::size_t p) { return p != 0 && (p & (p - 1)) == 0; }

inline std::size_t log2_exact(std::size_t p) {
  if (!is_power_of_two(p)) throw input_error("number of instances " + std::to_string(p) + " is not a power of two");
  std::size_t q = 0;
  while ((std::size_t{1} << q) < p) ++q;
  return q;
}

/// A NO-instance of LBEC in class (k, ell): r >= k+1 internally disjoint s-t
/// paths of length 2, with r large enough that the instance is not bad.
inline ProblemInstance padding_instance(std::int64_t k, std::int64_t ell, bool directed) {
  if (ell < 3) throw input_error("cannot build a NO-instance in-class for ell < 3");
  if (k < 0) throw input_error("negative budget");
  const auto r = static_cast<std::size_t>(std::max(k + 1, (ell + 1) / 2));
  Graph g(2, directed);
  for (std::size_t j = 0; j < r; ++j) {
    const Vertex mid = g.add_vertex();
    g.add_edge(0, mid);
    g.add_edge(mid, 1);
  }
  return make_lbec(std::move(g), 0, 1, k, ell);
}

/// Appends padding NO-instances until the count is a power of two.
inline std::vector<ProblemInstance> pad_to_power_of_two(std::vector<ProblemInstance> instances,
                                                        ProblemKind kind = ProblemKind::lbec) {
  if (kind != ProblemKind::lbec) throw input_error("padding is defined for LBEC inputs");
  const EquivalenceClass cls = check_equivalent(instances);
  if (instances.front().kind != kind) throw input_error("instances are not of the requested kind");
  if (cls.bad) throw input_error("cannot pad the class of bad instances");
  const bool directed = instances.front().graph.directed();
  std::size_t target = 1;
  while (target < instances.size()) target *= 2;
  while (instances.size() < target) instances.push_back(padding_instance(cls.k, cls.ell, directed));
  return instances;
}

/// Output of Constructions 1 and 2: the fractal on vertices 0..p (edges
/// first), then each input's remaining vertices and edges in input order.
struct Construction {
  Graph graph;
  TFractal fractal;
  std::vector<std::vector<Vertex>> vertex_map;  // per input: input vertex -> composed vertex
  std::vector<std::vector<EdgeId>> edge_map;    // per input: input edge -> composed edge
};

namespace detail {

inline Construction construct(const std::vector<ProblemInstance>& inputs, Cost c, bool directed) {
  if (inputs.empty()) throw input_error("at least one input instance is required");
  const std::size_t q = log2_exact(inputs.size());
  Construction out;
  out.fractal = build_fractal(q, directed, c);
  out.graph = out.fractal.graph;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const ProblemInstance& in = inputs[i];
    const std::string which = "input " + std::to_string(i + 1);
    if (!in.s || !in.t || *in.s == *in.t) throw input_error(which + " needs distinct terminals s and t");
    if (in.graph.directed() != directed) {
      throw input_error(which + (directed ? " must be directed" : " must be undirected"));
    }
    if (directed && !is_acyclic(in.graph)) throw input_error(which + " is not acyclic");
    std::vector<Vertex> vmap(in.graph.vertex_count());
    for (Vertex v = 0; v < in.graph.vertex_count(); ++v) {
      if (v == *in.s) {
        vmap[v] = i;
      } else if (v == *in.t) {
        vmap[v] = i + 1;
      } else {
        vmap[v] = out.graph.add_vertex();
      }
    }
    std::vector<EdgeId> emap;
    for (const Edge& e : in.graph.edges()) emap.push_back(out.graph.add_edge(vmap[e.u], vmap[e.v], e.cost));
    out.vertex_map.push_back(std::move(vmap));
    out.edge_map.push_back(std::move(emap));
  }
  return out;
}

}  // namespace detail

/// Merges s_i into v_{i-1} and t_i into v_i of the cost-c fractal.
inline Construction construct1(const std::vector<ProblemInstance>& inputs, Cost c) {
  return detail::construct(inputs, c, false);
}

/// Directed form over the directed fractal; all inputs must be acyclic.
inline Construction construct2(const std::vector<ProblemInstance>& inputs, Cost c) {
  return detail::construct(inputs, c, true);
}

enum class ComposeMode { weighted, simple };

inline std::string_view to_string(ComposeMode mode) { return mode == ComposeMode::weighted ? "weighted" : "simple"; }

/// How the fractal edge cost is chosen. `k_squared` is c = k^2 verbatim;
/// `guarded` uses c = max(k^2, k+1), which equals k^2 for k >= 2 and keeps
/// the composition sound for k <= 1, where a fractal edge would otherwise be
/// no more expensive than an input edge.
enum class CostRule { guarded, k_squared };

inline Cost fractal_cost(std::int64_t k, CostRule rule) {
  const Cost sq = std::max<Cost>(k * k, 1);
  return rule == CostRule::k_squared ? sq : std::max<Cost>(sq, k + 1);
}

struct ComposeOptions {
  ComposeMode mode = ComposeMode::weighted;
  CostRule cost_rule = CostRule::guarded;
  /// Directed MDED: make the attached paths two-way and drop (tau', sigma').
  /// With one-way paths a vertex next to tau must travel through tau',
  /// sigma' and the whole sigma path to reach the interior, so the diameter
  /// can reach ell' without selecting any instance.
  bool two_way_paths = true;
};

struct CompositionParams {
  std::size_t p = 1;
  std::size_t q = 0;
  Cost c = 1;
  std::int64_t k_prime = 0;
  std::int64_t ell_prime = 0;
  std::optional<std::int64_t> L;
  std::size_t n_max = 0;
};

struct CompositionArtifact {
  ProblemInstance composed;
  std::vector<std::size_t> selector;  // selector[i] = input selected by gap i; entry 0 unused
  CompositionParams params;
  ComposeMode mode = ComposeMode::weighted;
  Construction construction;  // the weighted graph before any expansion
  std::optional<Vertex> sigma_prime;
  std::optional<Vertex> tau_prime;
};

namespace detail {

inline EquivalenceClass require_composable(const std::vector<ProblemInstance>& inputs) {
  const EquivalenceClass cls = check_equivalent(inputs);
  if (inputs.front().kind != ProblemKind::lbec) throw input_error("compositions take LBEC inputs");
  if (cls.bad) throw input_error("the class of bad instances is composed trivially; refusing");
  if (cls.ell < 3) throw input_error("compositions assume ell >= 3");
  for (const auto& in : inputs) validate(in);
  return cls;
}

inline CompositionArtifact start_artifact(const std::vector<ProblemInstance>& inputs, const EquivalenceClass& cls,
                                          const ComposeOptions& opts, bool directed) {
  CompositionArtifact art;
  art.mode = opts.mode;
  art.params.p = inputs.size();
  art.params.q = log2_exact(inputs.size());
  art.params.c = fractal_cost(cls.k, opts.cost_rule);
  art.params.k_prime = art.params.c * static_cast<Cost>(art.params.q + 1) + cls.k;
  for (const auto& in : inputs) art.params.n_max = std::max(art.params.n_max, in.graph.vertex_count());
  art.construction = directed ? construct2(inputs, art.params.c) : construct1(inputs, art.params.c);
  art.selector.assign(inputs.size() + 1, 0);
  for (std::size_t i = 1; i <= inputs.size(); ++i) art.selector[i] = i;
  return art;
}

/// Appends a path of `length` edges starting at `from`; returns its far end.
/// Directed graphs get arcs from -> end, or end -> from when `towards` is
/// set, plus the reverse arcs when `both_ways` is set.
inline Vertex attach_path(Graph& g, Vertex from, std::int64_t length, bool towards, bool both_ways = false) {
  Vertex cur = from;
  for (std::int64_t j = 0; j < length; ++j) {
    const Vertex next = g.add_vertex();
    if (towards) {
      g.add_edge(next, cur);
    } else {
      g.add_edge(cur, next);
    }
    if (both_ways && g.directed()) {
      if (towards) {
        g.add_edge(cur, next);
      } else {
        g.add_edge(next, cur);
      }
    }
    cur = next;
  }
  return cur;
}

}  // namespace detail

/// LBEC into LBEC: s = sigma, t = tau, k' = c(log p + 1) + k,
/// ell' = ell + log p. Inputs are undirected, or all directed acyclic for
/// the DAG variant. Simple mode expands every edge by subdivide_and_multiply
/// and doubles ell'.
inline CompositionArtifact compose_lbec(const std::vector<ProblemInstance>& inputs, const ComposeOptions& opts = {}) {
  const EquivalenceClass cls = detail::require_composable(inputs);
  const bool directed = inputs.front().graph.directed();
  CompositionArtifact art = detail::start_artifact(inputs, cls, opts, directed);
  art.params.ell_prime = cls.ell + static_cast<std::int64_t>(art.params.q);
  const Graph& g = art.construction.graph;
  const TFractal& f = art.construction.fractal;
  if (opts.mode == ComposeMode::weighted) {
    art.composed = make_lbec(g, f.sigma, f.tau, art.params.k_prime, art.params.ell_prime);
  } else {
    art.params.ell_prime *= 2;
    art.composed = make_lbec(subdivide_and_multiply(g), f.sigma, f.tau, art.params.k_prime, art.params.ell_prime);
  }
  return art;
}

/// LBEC on connected graphs into MDED. Paths of length L hang off sigma and
/// tau; the far ends sigma', tau' realize the diameter.
///   undirected: L = n_max(2 log p + 3) + 1
///   directed:   L = ell n_max(2 log p + 3) + 1, the paths run sigma' -> sigma
///               and tau -> tau', arcs (tau', sigma') and (tau, sigma) close
///               the graph (the latter with cost k'+1), and every input arc
///               (v, w) gets a parallel directed path of length ell. By
///               default the paths are two-way instead and (tau', sigma') is
///               omitted; see ComposeOptions::two_way_paths.
/// ell' = 2L + log p + ell. Only weighted mode is supported: expanding the
/// paths moves the far ends off the doubled metric.
inline CompositionArtifact compose_mded(const std::vector<ProblemInstance>& inputs, bool directed,
                                        const ComposeOptions& opts = {}) {
  if (opts.mode != ComposeMode::weighted) throw input_error("MDED composition supports weighted mode only");
  const EquivalenceClass cls = detail::require_composable(inputs);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto& in = inputs[i];
    const std::string which = "input " + std::to_string(i + 1);
    if (in.graph.directed() != directed) throw input_error(which + (directed ? " must be directed" : " must be undirected"));
    if (!directed && !is_connected(in.graph)) throw input_error(which + " is not connected");
    if (directed) {
      const auto from = bfs_distances(in.graph, *in.s);
      const auto to = bfs_distances_to(in.graph, *in.t);
      for (Vertex v = 0; v < in.graph.vertex_count(); ++v) {
        if (from[v] == unreachable || to[v] == unreachable) {
          throw input_error(which + ": every vertex must be reachable from s and reach t");
        }
      }
    }
  }

  std::vector<ProblemInstance> augmented = inputs;
  if (directed) {
    for (auto& in : augmented) {
      const std::size_t m = in.graph.edge_count();
      for (EdgeId e = 0; e < m; ++e) {
        const Edge arc = in.graph.edge(e);
        Vertex cur = arc.u;
        for (std::int64_t j = 1; j < cls.ell; ++j) {
          const Vertex next = in.graph.add_vertex();
          in.graph.add_edge(cur, next);
          cur = next;
        }
        in.graph.add_edge(cur, arc.v);
      }
    }
  }

  CompositionArtifact art = detail::start_artifact(augmented, cls, opts, directed);
  const auto q = static_cast<std::int64_t>(art.params.q);
  // n_max counts the inputs as given, before augmentation.
  art.params.n_max = 0;
  for (const auto& in : inputs) art.params.n_max = std::max(art.params.n_max, in.graph.vertex_count());
  const auto n_max = static_cast<std::int64_t>(art.params.n_max);
  const std::int64_t L = (directed ? cls.ell : 1) * n_max * (2 * q + 3) + 1;
  art.params.L = L;
  art.params.ell_prime = 2 * L + q + cls.ell;

  Graph g = art.construction.graph;
  const TFractal& f = art.construction.fractal;
  const Vertex sp = detail::attach_path(g, f.sigma, L, directed, opts.two_way_paths);
  const Vertex tp = detail::attach_path(g, f.tau, L, false, opts.two_way_paths);
  g.set_label(sp, "sigma'");
  g.set_label(tp, "tau'");
  if (directed) {
    // With two-way paths the arc (tau', sigma') is left out: it would let a
    // single deleted path arc turn a path back into a one-way detour.
    if (!opts.two_way_paths) g.add_edge(tp, sp);
    g.add_edge(f.tau, f.sigma, art.params.k_prime + 1);
  }
  art.sigma_prime = sp;
  art.tau_prime = tp;
  art.composed = make_mded(std::move(g), art.params.k_prime, art.params.ell_prime);
  return art;
}

/// LBEC on DAGs into DSCT: construct2 plus the back-arc (tau, sigma) of cost
/// k'+1, so every cycle is a sigma-tau path closed by that arc. A cycle has
/// length dist(sigma, tau) + 1, hence ell' = ell + log p makes "no cycle of
/// length <= ell'" equivalent to dist(sigma, tau) >= ell + log p.
inline CompositionArtifact compose_dsct(const std::vector<ProblemInstance>& inputs, const ComposeOptions& opts = {}) {
  const EquivalenceClass cls = detail::require_composable(inputs);
  if (!inputs.front().graph.directed()) throw input_error("DSCT composition needs directed acyclic inputs");
  CompositionArtifact art = detail::start_artifact(inputs, cls, opts, true);
  art.params.ell_prime = cls.ell + static_cast<std::int64_t>(art.params.q);
  Graph g = art.construction.graph;
  const TFractal& f = art.construction.fractal;
  g.add_edge(f.tau, f.sigma, art.params.k_prime + 1);
  if (opts.mode == ComposeMode::simple) {
    art.params.ell_prime *= 2;
    g = subdivide_and_multiply(g);
  }
  art.composed = make_dsct(std::move(g), art.params.k_prime, art.params.ell_prime);
  return art;
}

}  // namespace tfractal
