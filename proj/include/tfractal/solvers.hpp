#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "tfractal/algorithms.hpp"
#include "tfractal/graph.hpp"
#include "tfractal/instance.hpp"

namespace tfractal {

namespace detail {

inline void require_solvable(const ProblemInstance& inst, ProblemKind kind) {
  if (inst.kind != kind) throw input_error("solver called with a " + std::string(to_string(inst.kind)) + " instance");
  if (is_bad(inst)) throw input_error("bad instance: max(k, ell) exceeds |E| or a parameter is negative");
  validate(inst);
}

inline std::vector<EdgeId> sorted_ids(const EdgeMask& mask) {
  std::vector<EdgeId> ids;
  for (EdgeId e = 0; e < mask.size(); ++e) {
    if (mask[e]) ids.push_back(e);
  }
  return ids;
}

/// Search state shared by the three branching algorithms. `removed` holds the
/// current deletion set, `kept` the edges fixed by earlier sibling branches.
struct BranchState {
  const Graph& g;
  EdgeMask removed;
  EdgeMask kept;
  std::uint64_t leaves = 0;

  explicit BranchState(const Graph& graph)
      : g(graph), removed(graph.edge_count(), false), kept(graph.edge_count(), false) {}

  /// Branches over the deletable edges of `found`: branch j deletes e_j and
  /// keeps e_1..e_{j-1}, since a solution that deletes none of them earlier
  /// must delete e_j. Returns true once `recurse` succeeds.
  template <class Recurse, class Allowed>
  bool branch(const std::vector<EdgeId>& found, Cost budget, Recurse&& recurse, Allowed&& allowed) {
    std::vector<EdgeId> candidates;
    for (EdgeId e : found) {
      if (!kept[e] && g.edge(e).cost <= budget) candidates.push_back(e);
    }
    if (candidates.empty()) {
      ++leaves;
      return false;
    }
    std::vector<EdgeId> newly_kept;
    bool ok = false;
    for (EdgeId e : candidates) {
      removed[e] = true;
      if (allowed(e)) {
        ok = recurse(budget - g.edge(e).cost);
      } else {
        ++leaves;
      }
      if (ok) break;
      removed[e] = false;
      kept[e] = true;
      newly_kept.push_back(e);
    }
    for (EdgeId e : newly_kept) kept[e] = false;
    return ok;
  }
};

/// Length-bounded cut brancher for one terminal pair: deletes edges until
/// dist(s, t) >= ell or the budget runs out. `allowed` may veto a deletion.
template <class Allowed>
bool branch_pair(BranchState& st, Vertex s, Vertex t, std::int64_t ell, Cost budget, Allowed&& allowed) {
  const auto path = shortest_path(st.g, s, t, st.removed);
  if (!path || static_cast<std::int64_t>(path->size()) >= ell) {
    ++st.leaves;
    return true;
  }
  return st.branch(
      *path, budget, [&](Cost rest) { return branch_pair(st, s, t, ell, rest, allowed); }, allowed);
}

}  // namespace detail

/// Builds G_v: v splits into v_in (all in-arcs), v_out (all out-arcs) and the
/// arc (v_in, v_out). Returns the graph and, per split-graph edge, the
/// original arc (or the original edge count for the extra arc).
struct SplitGraph {
  Graph graph;
  Vertex v_in = 0;
  Vertex v_out = 0;
  std::vector<EdgeId> original;
};

inline SplitGraph split_graph(const Graph& g, Vertex v, const EdgeMask& removed = {}) {
  if (!g.directed()) throw input_error("split graph needs a directed graph");
  if (!g.has_vertex(v)) throw input_error("vertex id out of range");
  SplitGraph sg{Graph(g.vertex_count() + 1, true), v, g.vertex_count(), {}};
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (is_removed(removed, e)) continue;
    const Edge& a = g.edge(e);
    const Vertex from = a.u == v ? sg.v_out : a.u;
    sg.graph.add_edge(from, a.v);
    sg.original.push_back(e);
  }
  sg.graph.add_edge(sg.v_in, sg.v_out);
  sg.original.push_back(g.edge_count());
  return sg;
}

/// A shortest directed cycle as arc ids, found as a shortest v_out-v_in path
/// in G_v over all v; ties go to the smallest v.
inline std::optional<std::vector<EdgeId>> shortest_cycle(const Graph& g, const EdgeMask& removed = {}) {
  std::optional<std::vector<EdgeId>> best;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.in(v).empty() || g.out(v).empty()) continue;
    const SplitGraph sg = split_graph(g, v, removed);
    const auto path = shortest_path(sg.graph, sg.v_out, sg.v_in);
    if (!path || (best && path->size() >= best->size())) continue;
    std::vector<EdgeId> cycle;
    for (EdgeId e : *path) cycle.push_back(sg.original[e]);
    best = std::move(cycle);
    if (best->size() == 2) break;
  }
  return best;
}

/// LBEC by branching on short s-t paths. When k reaches the minimum s-t cut
/// the cut itself is returned.
inline Verdict solve_lbec_fpt(const ProblemInstance& inst) {
  detail::require_solvable(inst, ProblemKind::lbec);
  const Graph& g = inst.graph;
  const Vertex s = *inst.s;
  const Vertex t = *inst.t;
  Verdict out;
  out.nodes = out.peak_nodes = 1;
  if (inst.ell <= 1) {
    out.answer = true;
    return out;
  }
  const auto d = bfs_distance(g, s, t);
  if (!d || static_cast<std::int64_t>(*d) >= inst.ell) {
    out.answer = true;
    return out;
  }
  const CutCertificate cut = min_cut(g, s, t);
  if (cut.total_cost <= inst.k) {
    out.answer = true;
    out.witness = cut.edges;
    return out;
  }
  detail::BranchState st(g);
  out.answer = detail::branch_pair(st, s, t, inst.ell, inst.k, [](EdgeId) { return true; });
  out.nodes = out.peak_nodes = st.leaves;
  if (out.answer) out.witness = detail::sorted_ids(st.removed);
  return out;
}

/// MDED: some pair must end at distance >= ell, so run the LBEC brancher per
/// pair (ordered pairs when directed) and refuse deletions that disconnect.
inline Verdict solve_mded_fpt(const ProblemInstance& inst) {
  detail::require_solvable(inst, ProblemKind::mded);
  const Graph& g = inst.graph;
  Verdict out;
  if (inst.ell <= 0) {
    out.answer = true;
    out.nodes = out.peak_nodes = 1;
    return out;
  }
  detail::BranchState st(g);
  auto stays_connected = [&](EdgeId) {
    return g.directed() ? is_strongly_connected(g, st.removed) : is_connected(g, st.removed);
  };
  for (Vertex v = 0; v < g.vertex_count() && !out.answer; ++v) {
    for (Vertex w = g.directed() ? 0 : v + 1; w < g.vertex_count(); ++w) {
      if (v == w) continue;
      st.leaves = 0;
      const bool ok = detail::branch_pair(st, v, w, inst.ell, inst.k, stays_connected);
      out.nodes += st.leaves;
      out.peak_nodes = std::max(out.peak_nodes, st.leaves);
      if (ok) {
        out.answer = true;
        out.witness = detail::sorted_ids(st.removed);
        break;
      }
    }
  }
  return out;
}

namespace detail {

inline bool branch_cycles(BranchState& st, std::int64_t ell, Cost budget) {
  const auto cycle = shortest_cycle(st.g, st.removed);
  if (!cycle || static_cast<std::int64_t>(cycle->size()) > ell) {
    ++st.leaves;
    return true;
  }
  return st.branch(
      *cycle, budget, [&](Cost rest) { return branch_cycles(st, ell, rest); }, [](EdgeId) { return true; });
}

}  // namespace detail

/// DSCT by branching over the arcs of a shortest cycle of length <= ell.
inline Verdict solve_dsct_fpt(const ProblemInstance& inst) {
  detail::require_solvable(inst, ProblemKind::dsct);
  Verdict out;
  if (inst.ell <= 0) {
    out.answer = true;
    out.nodes = out.peak_nodes = 1;
    return out;
  }
  detail::BranchState st(inst.graph);
  out.answer = detail::branch_cycles(st, inst.ell, inst.k);
  out.nodes = out.peak_nodes = st.leaves;
  if (out.answer) out.witness = detail::sorted_ids(st.removed);
  return out;
}

inline Verdict solve_fpt(const ProblemInstance& inst) {
  switch (inst.kind) {
    case ProblemKind::lbec: return solve_lbec_fpt(inst);
    case ProblemKind::mded: return solve_mded_fpt(inst);
    case ProblemKind::dsct: return solve_dsct_fpt(inst);
  }
  throw input_error("unknown problem kind");
}

struct BruteForceOptions {
  std::uint64_t node_budget = 50'000'000;
  /// Budget counts deletion cost; otherwise it counts edges.
  bool cost_aware = true;
  /// LBEC only: G - F must stay connected (undirected), or every vertex must
  /// stay reachable from s and reach t (directed).
  bool keep_connected = false;
};

namespace detail {

inline bool lbec_connectivity_ok(const Graph& g, Vertex s, Vertex t, const EdgeMask& removed) {
  if (!g.directed()) return is_connected(g, removed);
  const auto from = bfs_distances(g, s, removed);
  const auto to = bfs_distances_to(g, t, removed);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (from[v] == unreachable || to[v] == unreachable) return false;
  }
  return true;
}

}  // namespace detail

/// Exhaustive search over edge subsets in lexicographic order (as sorted id
/// sequences, prefixes first), so the first hit is the smallest witness.
/// All pruning is exact:
///  - LBEC/DSCT: a subtree is skipped once the edges it can no longer delete
///    (earlier edges not taken, later edges beyond the remaining budget)
///    already contain a short path or cycle;
///  - connectivity requirements are monotone, so a subtree is skipped once
///    the current deletion set breaks them, and edges whose lone deletion
///    breaks them are never tried.
inline Verdict solve_bruteforce(const ProblemInstance& inst, const BruteForceOptions& opts = {}) {
  if (is_bad(inst)) throw input_error("bad instance: max(k, ell) exceeds |E| or a parameter is negative");
  validate(inst);
  if (opts.keep_connected && inst.kind != ProblemKind::lbec) throw input_error("keep_connected applies to LBEC only");
  const Graph& g = inst.graph;
  const std::size_t m = g.edge_count();
  auto cost_of = [&](EdgeId e) -> Cost { return opts.cost_aware ? g.edge(e).cost : 1; };

  const bool needs_connectivity = inst.kind == ProblemKind::mded || opts.keep_connected;
  auto connectivity_ok = [&](const EdgeMask& removed) {
    if (inst.kind == ProblemKind::mded) {
      return g.directed() ? is_strongly_connected(g, removed) : is_connected(g, removed);
    }
    return detail::lbec_connectivity_ok(g, *inst.s, *inst.t, removed);
  };

  std::vector<bool> excluded(m, false);
  if (needs_connectivity) {
    EdgeMask single(m, false);
    for (EdgeId e = 0; e < m; ++e) {
      single[e] = true;
      excluded[e] = !connectivity_ok(single);
      single[e] = false;
    }
  }

  auto kept_fails = [&](const EdgeMask& removed, EdgeId frontier, Cost rest) {
    if (inst.ell <= 0 || inst.kind == ProblemKind::mded) return false;
    EdgeMask gone(m, true);
    for (EdgeId e = 0; e < m; ++e) {
      gone[e] = e < frontier ? removed[e] : !(excluded[e] || cost_of(e) > rest);
    }
    if (inst.kind == ProblemKind::lbec) {
      const auto d = bfs_distance(g, *inst.s, *inst.t, gone);
      return d && static_cast<std::int64_t>(*d) < inst.ell;
    }
    const auto c = shortest_cycle_length(g, gone);
    return c && static_cast<std::int64_t>(*c) <= inst.ell;
  };

  Verdict out;
  EdgeMask removed(m, false);
  std::vector<EdgeId> chosen;
  auto visit = [&](auto&& self, EdgeId next, Cost spent) -> bool {
    if (++out.nodes > opts.node_budget) throw resource_error("brute-force node budget exceeded");
    if (needs_connectivity && !connectivity_ok(removed)) return false;
    if (kept_fails(removed, next, inst.k - spent)) return false;
    if (satisfies(inst, removed)) return true;
    for (EdgeId e = next; e < m; ++e) {
      if (excluded[e] || spent + cost_of(e) > inst.k) continue;
      removed[e] = true;
      chosen.push_back(e);
      if (self(self, e + 1, spent + cost_of(e))) return true;
      chosen.pop_back();
      removed[e] = false;
    }
    return false;
  };
  out.answer = visit(visit, 0, 0);
  out.peak_nodes = out.nodes;
  if (out.answer) out.witness = chosen;
  return out;
}

}  // namespace tfractal
