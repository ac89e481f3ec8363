#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "implab/graph.hpp"
#include "implab/impropriety.hpp"
#include "implab/local_profile.hpp"
#include "implab/recognition.hpp"

namespace implab {

struct BalanceReport {
  int wt = 0;
  int imp = 0;
  bool balanced = false;
  VertexSet basepoints = 0;
  bool critical = false;
  int p = 0;  // equals imp when critical
  std::vector<int> deletion_imps;  // imp(g - v) per vertex
};

/// Outcome of an executable theorem check.
struct CheckResult {
  enum class Status { Pass, Fail, Vacuous };
  Status status = Status::Vacuous;
  std::string check;
  std::string detail;
  std::vector<VertexSet> offending;  // counterexample or qualifying vertex sets

  bool passed() const { return status == Status::Pass; }
  bool failed() const { return status == Status::Fail; }
};

inline const char* to_string(CheckResult::Status s) {
  switch (s) {
    case CheckResult::Status::Pass: return "pass";
    case CheckResult::Status::Fail: return "fail";
    default: return "vacuous";
  }
}

inline void require_connected_interval(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph must be connected");
  require_interval(g);
}

/// Imp of every single-vertex deletion; deletions may disconnect (component maximum).
inline std::vector<int> deletion_improprieties(const Graph& g) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) out.push_back(impropriety(delete_vertex(g, v)).p);
  return out;
}

/// Report for any interval graph; connectivity is not enforced.
inline BalanceReport balance_report_unchecked(const Graph& g) {
  BalanceReport r;
  r.imp = impropriety(g).p;
  std::vector<int> weights(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) {
    weights[static_cast<std::size_t>(v)] = weight_of_vertex(g, v);
    r.wt = std::max(r.wt, weights[static_cast<std::size_t>(v)]);
  }
  r.balanced = r.wt == r.imp;
  if (r.balanced && r.wt > 0) {
    for (int v = 0; v < g.order(); ++v)
      if (weights[static_cast<std::size_t>(v)] == r.imp) r.basepoints |= vset::single(v);
  }
  if (r.imp > 0) {
    r.deletion_imps = deletion_improprieties(g);
    r.critical = std::all_of(r.deletion_imps.begin(), r.deletion_imps.end(), [&](int q) { return q < r.imp; });
  }
  r.p = r.critical ? r.imp : 0;
  return r;
}

inline BalanceReport balance_report(const Graph& g) {
  require_connected_interval(g);
  return balance_report_unchecked(g);
}

struct Criticality {
  bool critical = false;
  int p = 0;
};

/// p-critical via single-vertex deletions: imp(g) = p > 0 and imp(g - v) < p for all v.
inline Criticality is_p_critical(const Graph& g) {
  require_connected_interval(g);
  const int p = impropriety(g).p;
  if (p == 0) return {false, 0};
  for (int v = 0; v < g.order(); ++v)
    if (impropriety(delete_vertex(g, v)).p >= p) return {false, p};
  return {true, p};
}

/// Definitional criticality over every proper nonempty induced subgraph.
inline Criticality is_p_critical_exhaustive(const Graph& g) {
  require_connected_interval(g);
  if (g.order() > 16) throw GuardError("exhaustive criticality refused above 16 vertices");
  const int p = impropriety(g).p;
  if (p == 0) return {false, 0};
  const VertexSet all = g.vertices();
  for (VertexSet s = 1; s < all; ++s)
    if (impropriety(induced_subgraph(g, s).graph).p >= p) return {false, p};
  return {true, p};
}

namespace detail {

inline bool balanced_critical(const BalanceReport& r) { return r.balanced && r.critical; }

inline CheckResult precondition_unmet(const char* name, const BalanceReport& r) {
  CheckResult c;
  c.check = name;
  c.status = CheckResult::Status::Vacuous;
  c.detail = std::string("precondition unmet: ") + (r.balanced ? "" : "not balanced") +
             (!r.balanced && !r.critical ? ", " : "") + (r.critical ? "" : "not critical");
  return c;
}

}  // namespace detail

/// Every exterior component at every maximum-weight vertex has exactly two vertices.
inline CheckResult check_exterior_pair(const Graph& g, const BalanceReport& r) {
  if (!detail::balanced_critical(r)) return detail::precondition_unmet("exterior-pair", r);
  CheckResult c{CheckResult::Status::Pass, "exterior-pair", "", {}};
  for (int z = 0; z < g.order(); ++z) {
    auto prof = local_components(g, z);
    if (prof.weight != r.wt) continue;
    for (const auto& comp : prof.components) {
      if (comp.exterior && comp.order != 2) {
        c.status = CheckResult::Status::Fail;
        c.offending.push_back(comp.vertices);
        c.detail = "exterior component of order " + std::to_string(comp.order) + " at vertex " + std::to_string(z);
      }
    }
  }
  return c;
}

inline CheckResult check_exterior_pair(const Graph& g) { return check_exterior_pair(g, balance_report(g)); }

inline CheckResult check_unique_basepoint(const Graph& g, const BalanceReport& r) {
  if (!detail::balanced_critical(r)) return detail::precondition_unmet("unique-basepoint", r);
  CheckResult c{CheckResult::Status::Pass, "unique-basepoint", "", {r.basepoints}};
  if (vset::size(r.basepoints) != 1) {
    c.status = CheckResult::Status::Fail;
    c.detail = std::to_string(vset::size(r.basepoints)) + " basepoints";
  }
  return c;
}

inline CheckResult check_unique_basepoint(const Graph& g) { return check_unique_basepoint(g, balance_report(g)); }

/// At a basepoint with at most one exterior component, at least two local components are
/// cliques of maximum order (three with none); type-2 basepoints carry no condition.
inline CheckResult check_side_cliques(const Graph& g, const BalanceReport& r) {
  if (!detail::balanced_critical(r)) return detail::precondition_unmet("side-cliques", r);
  CheckResult c{CheckResult::Status::Vacuous, "side-cliques", "", {}};
  for (int z : vset::members(r.basepoints)) {
    auto prof = local_components(g, z);
    if (prof.n_exterior >= 2) {
      c.detail = "basepoint " + std::to_string(z) + " has two exterior components";
      continue;
    }
    int max_order = 0;
    for (const auto& comp : prof.components) max_order = std::max(max_order, comp.order);
    std::vector<VertexSet> qualifying;
    for (const auto& comp : prof.components)
      if (comp.order == max_order && g.is_clique(comp.vertices)) qualifying.push_back(comp.vertices);
    const std::size_t need = prof.n_exterior == 0 ? 3 : 2;
    if (qualifying.size() < need) {
      c.status = CheckResult::Status::Fail;
      c.detail = "basepoint " + std::to_string(z) + " has " + std::to_string(qualifying.size()) +
                 " maximum-order clique components, needs " + std::to_string(need);
      c.offending = {vset::single(z)};
      return c;
    }
    c.status = CheckResult::Status::Pass;
    c.offending = qualifying;
    c.detail = std::to_string(qualifying.size()) + " maximum-order clique components at basepoint " + std::to_string(z);
  }
  return c;
}

inline CheckResult check_side_cliques(const Graph& g) { return check_side_cliques(g, balance_report(g)); }

/// Positive-weight vertices induce a disjoint union of paths.
inline CheckResult check_positive_weight_paths(const Graph& g) {
  require_connected_interval(g);
  CheckResult c{CheckResult::Status::Pass, "positive-weight-paths", "", {}};
  const VertexSet pos = positive_weight_vertices(g);
  if (pos == 0) {
    c.status = CheckResult::Status::Vacuous;
    c.detail = "no vertex of positive weight";
    return c;
  }
  auto sub = induced_subgraph(g, pos);
  bool ok = true;
  for (int v = 0; v < sub.graph.order(); ++v) ok = ok && sub.graph.degree(v) <= 2;
  const int acyclic_edges = sub.graph.order() - static_cast<int>(components(sub.graph).size());
  ok = ok && sub.graph.edge_count() == acyclic_edges;
  c.offending = {pos};
  if (!ok) {
    c.status = CheckResult::Status::Fail;
    c.detail = "positive-weight vertices do not induce a union of paths";
  }
  return c;
}

/// Every vertex has at most two exterior components.
inline CheckResult check_exterior_bound(const Graph& g) {
  CheckResult c{CheckResult::Status::Vacuous, "exterior-bound", "no exterior components", {}};
  for (int z = 0; z < g.order(); ++z) {
    const int t = vertex_type(g, z);
    if (t > 0 && c.status == CheckResult::Status::Vacuous) {
      c.status = CheckResult::Status::Pass;
      c.detail.clear();
    }
    if (t > 2) {
      c.status = CheckResult::Status::Fail;
      c.offending.push_back(vset::single(z));
      c.detail = "vertex " + std::to_string(z) + " has " + std::to_string(t) + " exterior components";
    }
  }
  return c;
}

/// imp >= wt; vacuous when the weight is zero.
inline CheckResult check_weight_bound(const BalanceReport& r) {
  CheckResult c{CheckResult::Status::Pass, "weight-lower-bound", "", {}};
  if (r.wt == 0) {
    c.status = CheckResult::Status::Vacuous;
    c.detail = "weight 0";
  } else if (r.imp < r.wt) {
    c.status = CheckResult::Status::Fail;
    c.detail = "imp " + std::to_string(r.imp) + " < wt " + std::to_string(r.wt);
  }
  return c;
}

/// Basepoints of a balanced graph have at least three local components.
inline CheckResult check_basepoint_components(const Graph& g, const BalanceReport& r) {
  CheckResult c{CheckResult::Status::Vacuous, "basepoint-components", "no basepoints", {}};
  for (int z : vset::members(r.basepoints)) {
    c.status = CheckResult::Status::Pass;
    c.detail.clear();
    if (local_components(g, z).n_components < 3) {
      c.status = CheckResult::Status::Fail;
      c.offending.push_back(vset::single(z));
      c.detail = "basepoint " + std::to_string(z) + " has fewer than three local components";
      return c;
    }
  }
  return c;
}

}  // namespace implab
