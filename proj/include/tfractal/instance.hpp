#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfractal/algorithms.hpp"
#include "tfractal/graph.hpp"

namespace tfractal {

/// LBEC: delete edges of total cost <= k so that dist(s, t) >= ell.
/// MDED: delete edges of total cost <= k keeping the graph (strongly)
///       connected with diameter >= ell.
/// DSCT: delete arcs of total cost <= k so that no directed cycle of length
///       <= ell remains.
enum class ProblemKind { lbec, mded, dsct };

inline std::string_view to_string(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::lbec: return "lbec";
    case ProblemKind::mded: return "mded";
    case ProblemKind::dsct: return "dsct";
  }
  return "?";
}

inline ProblemKind problem_kind_from(std::string_view name) {
  if (name == "lbec") return ProblemKind::lbec;
  if (name == "mded") return ProblemKind::mded;
  if (name == "dsct") return ProblemKind::dsct;
  throw input_error("unknown problem kind '" + std::string(name) + "'");
}

struct ProblemInstance {
  ProblemKind kind = ProblemKind::lbec;
  Graph graph;
  std::optional<Vertex> s;  // LBEC only
  std::optional<Vertex> t;  // LBEC only
  std::int64_t k = 0;       // budget, counted in deletion cost
  std::int64_t ell = 0;

  friend bool operator==(const ProblemInstance&, const ProblemInstance&) = default;
};

inline ProblemInstance make_lbec(Graph g, Vertex s, Vertex t, std::int64_t k, std::int64_t ell) {
  return ProblemInstance{ProblemKind::lbec, std::move(g), s, t, k, ell};
}
inline ProblemInstance make_mded(Graph g, std::int64_t k, std::int64_t ell) {
  return ProblemInstance{ProblemKind::mded, std::move(g), std::nullopt, std::nullopt, k, ell};
}
inline ProblemInstance make_dsct(Graph g, std::int64_t k, std::int64_t ell) {
  return ProblemInstance{ProblemKind::dsct, std::move(g), std::nullopt, std::nullopt, k, ell};
}

/// Instances with max(k, ell) > |E| or min(k, ell) < 0 form a single
/// equivalence class of trivial inputs. On cost-annotated graphs the budget
/// is compared against the total deletion cost instead of |E|.
inline bool is_bad(const ProblemInstance& inst) {
  const auto m = static_cast<std::int64_t>(inst.graph.edge_count());
  Cost total = 0;
  for (const Edge& e : inst.graph.edges()) total += e.cost;
  return inst.k > total || inst.ell > m || std::min(inst.k, inst.ell) < 0;
}

/// Throws input_error when a kind-specific invariant does not hold.
inline void validate(const ProblemInstance& inst) {
  if (!inst.graph.unit_lengths()) throw input_error("instances need unit edge lengths");
  switch (inst.kind) {
    case ProblemKind::lbec:
      if (!inst.s || !inst.t) throw input_error("LBEC needs terminals s and t");
      if (!inst.graph.has_vertex(*inst.s) || !inst.graph.has_vertex(*inst.t)) {
        throw input_error("terminal out of range");
      }
      if (*inst.s == *inst.t) throw input_error("LBEC needs s != t");
      break;
    case ProblemKind::mded:
      if (inst.graph.directed() ? !is_strongly_connected(inst.graph) : !is_connected(inst.graph)) {
        throw input_error(inst.graph.directed() ? "MDED needs a strongly connected graph"
                                                : "MDED needs a connected graph");
      }
      break;
    case ProblemKind::dsct:
      if (!inst.graph.directed()) throw input_error("DSCT needs a directed graph");
      break;
  }
}

/// Length of a shortest directed cycle, or nullopt for acyclic graphs.
inline std::optional<std::size_t> shortest_cycle_length(const Graph& g, const EdgeMask& removed = {}) {
  std::optional<std::size_t> best;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto dist = bfs_distances(g, v, removed);
    for (const Incidence& inc : g.in(v)) {
      if (is_removed(removed, inc.edge) || dist[inc.to] == unreachable) continue;
      const std::size_t len = dist[inc.to] + 1;
      if (!best || len < *best) best = len;
    }
  }
  return best;
}

/// The instance's defining predicate on G - F (budget not checked).
inline bool satisfies(const ProblemInstance& inst, const EdgeMask& removed) {
  const auto ell = inst.ell;
  switch (inst.kind) {
    case ProblemKind::lbec: {
      if (ell <= 0) return true;
      const auto d = bfs_distance(inst.graph, *inst.s, *inst.t, removed);
      return !d || static_cast<std::int64_t>(*d) >= ell;
    }
    case ProblemKind::mded: {
      const bool connected =
          inst.graph.directed() ? is_strongly_connected(inst.graph, removed) : is_connected(inst.graph, removed);
      if (!connected) return false;
      return diameter_at_least(inst.graph, static_cast<std::size_t>(std::max<std::int64_t>(ell, 0)), removed);
    }
    case ProblemKind::dsct: {
      if (ell <= 0) return true;
      const auto c = shortest_cycle_length(inst.graph, removed);
      return !c || static_cast<std::int64_t>(*c) > ell;
    }
  }
  return false;
}

struct Verdict {
  bool answer = false;
  std::vector<EdgeId> witness;  // sorted edge ids
  std::uint64_t nodes = 0;      // search-tree leaves (or subsets tested)
  std::uint64_t peak_nodes = 0; // largest single branching run (per pair for MDED)
};

/// Replays a witness: within budget (by deletion cost) and predicate holds.
inline bool replay(const ProblemInstance& inst, const std::vector<EdgeId>& witness) {
  for (EdgeId e : witness) {
    if (e >= inst.graph.edge_count()) return false;
  }
  auto sorted = witness;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (inst.graph.total_cost(sorted) > inst.k) return false;
  return satisfies(inst, mask_of(inst.graph.edge_count(), sorted));
}

}  // namespace tfractal
