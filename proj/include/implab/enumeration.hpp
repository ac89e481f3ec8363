#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "implab/bal.hpp"
#include "implab/balance.hpp"
#include "implab/canonical.hpp"
#include "implab/graph.hpp"
#include "implab/impropriety.hpp"
#include "implab/parallel.hpp"
#include "implab/recognition.hpp"

namespace implab {

inline constexpr int kEnumerationGuard = 8;

namespace detail {

inline void check_enumeration_guard(int n, int guard) {
  if (n > guard)
    throw GuardError("enumeration refused: order " + std::to_string(n) + " exceeds guard " + std::to_string(guard));
}

inline std::vector<int> orbit_labels(int n, const std::vector<std::vector<int>>& generators) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& perm : generators)
    for (int v = 0; v < n; ++v) parent[static_cast<std::size_t>(find(v))] = find(perm[static_cast<std::size_t>(v)]);
  std::vector<int> label(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) label[static_cast<std::size_t>(v)] = find(v);
  return label;
}

/// Canonical augmentation test: the added vertex must lie in the orbit of the non-cut
/// vertex with the highest canonical position.
inline bool is_canonical_child(const Graph& child, const CanonicalForm& cf, int added) {
  int chosen = -1;
  for (int v = 0; v < child.order(); ++v) {
    if (child.order() > 1 && !is_connected(delete_vertex(child, v))) continue;
    if (chosen < 0 || cf.position[static_cast<std::size_t>(v)] > cf.position[static_cast<std::size_t>(chosen)]) chosen = v;
  }
  if (chosen == added) return true;
  auto orbits = orbit_labels(child.order(), cf.automorphisms);
  if (orbits[static_cast<std::size_t>(chosen)] == orbits[static_cast<std::size_t>(added)]) return true;
  return same_orbit(child, chosen, added);
}

}  // namespace detail

/// Calls `visit` once per isomorphism class of connected graphs on n vertices, each in
/// canonical labeling, in a fixed order.
inline void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit,
                                     int guard = kEnumerationGuard) {
  detail::check_enumeration_guard(n, guard);
  if (n <= 0) return;
  std::vector<Graph> level{canonical_form(Graph(1)).graph};
  for (int m = 2; m <= n; ++m) {
    std::vector<Graph> next;
    for (const Graph& parent : level) {
      std::set<CanonicalForm::Key> seen;
      for (VertexSet s = 1; s < vset::range(m - 1) + 1; ++s) {
        Graph child(m);
        for (auto [u, v] : parent.edges()) child.add_edge(u, v);
        vset::for_each(s, [&](int u) { child.add_edge(u, m - 1); });
        auto cf = canonical_form(child);
        if (!detail::is_canonical_child(child, cf, m - 1)) continue;
        if (seen.insert(cf.key()).second) next.push_back(cf.graph);
      }
    }
    level = std::move(next);
  }
  for (const Graph& g : level) visit(g);
}

inline std::vector<Graph> enumerate_connected_graphs(int n, int guard = kEnumerationGuard) {
  std::vector<Graph> out;
  for_each_connected_graph(n, [&](const Graph& g) { out.push_back(g); }, guard);
  return out;
}

inline std::vector<Graph> enumerate_interval_graphs(int n, int guard = kEnumerationGuard) {
  std::vector<Graph> out;
  for_each_connected_graph(
      n, [&](const Graph& g) {
        if (std::holds_alternative<CliqueOrdering>(is_interval(g))) out.push_back(g);
      },
      guard);
  return out;
}

/// Connected interval graphs of every order 1..n_max.
inline std::vector<Graph> interval_catalog(int n_max, int guard = kEnumerationGuard) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    auto level = enumerate_interval_graphs(n, guard);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

enum class MfisgClass { Balanced, Skew, Other };

inline const char* to_string(MfisgClass c) {
  switch (c) {
    case MfisgClass::Balanced: return "balanced";
    case MfisgClass::Skew: return "skew";
    default: return "other";
  }
}

inline bool has_cut_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.order() > 2 && !is_connected(delete_vertex(g, v))) return true;
  return false;
}

/// balanced: wt = imp; skew: wt < imp with a cut vertex; other: wt < imp and 2-connected.
inline MfisgClass classify_mfisg(const Graph& g, int wt, int imp) {
  if (wt == imp) return MfisgClass::Balanced;
  return has_cut_vertex(g) ? MfisgClass::Skew : MfisgClass::Other;
}

struct MfisgRecord {
  Graph graph;  // canonical labeling
  int p = 0;
  int imp = 0;
  int wt = 0;
  int n = 0;
  MfisgClass classification = MfisgClass::Other;
};

/// Interval graph g is a minimal forbidden subgraph for imp <= p.
inline bool is_mfisg(const Graph& g, int p, int* imp_out = nullptr) {
  const int imp = impropriety(g).p;
  if (imp_out) *imp_out = imp;
  if (imp <= p) return false;
  for (int v = 0; v < g.order(); ++v)
    if (impropriety(delete_vertex(g, v)).p > p) return false;
  return true;
}

/// All connected interval graphs on at most n_max vertices with imp > p whose single
/// deletions all have imp <= p. Ordered by order, then generation order.
inline std::vector<MfisgRecord> mfisg_enumerate(int p, int n_max, int jobs = 1, int guard = kEnumerationGuard) {
  detail::check_enumeration_guard(n_max, guard);
  std::vector<MfisgRecord> out;
  for (int n = 1; n <= n_max; ++n) {
    auto candidates = enumerate_interval_graphs(n, guard);
    auto found = parallel_map(candidates.size(), jobs, [&](std::size_t i) -> std::optional<MfisgRecord> {
      const Graph& g = candidates[i];
      int imp = 0;
      if (!is_mfisg(g, p, &imp)) return std::nullopt;
      const int wt = weight_of_graph(g);
      return MfisgRecord{g, p, imp, wt, n, classify_mfisg(g, wt, imp)};
    });
    for (auto& r : found)
      if (r) out.push_back(std::move(*r));
  }
  return out;
}

/// Everything known about a graph; defined for every input.
struct Classification {
  Graph graph;
  bool interval = false;
  std::optional<NonIntervalWitness> witness;
  std::optional<ImproprietyCertificate> certificate;
  bool connected = false;
  int imp = 0;
  int wt = 0;
  bool balanced = false;
  bool critical = false;
  int p = 0;
  VertexSet basepoints = 0;
  std::vector<int> types;
  std::vector<int> deletion_imps;
  std::optional<BalRecognition> bal_form;  // set for connected interval graphs
};

inline Classification classify(const Graph& g) {
  Classification c;
  c.graph = g;
  c.connected = is_connected(g);
  auto rec = is_interval(g);
  if (auto* w = std::get_if<NonIntervalWitness>(&rec)) {
    c.witness = *w;
    return c;
  }
  c.interval = true;
  c.certificate = impropriety(g);
  auto r = balance_report_unchecked(g);
  c.imp = r.imp;
  c.wt = r.wt;
  c.balanced = r.balanced;
  c.critical = r.critical;
  c.p = r.p;
  c.basepoints = r.basepoints;
  c.deletion_imps = r.deletion_imps;
  for (int v = 0; v < g.order(); ++v) c.types.push_back(vertex_type(g, v));
  if (c.connected && g.order() > 0) c.bal_form = is_bal_form(g);
  return c;
}

}  // namespace implab
