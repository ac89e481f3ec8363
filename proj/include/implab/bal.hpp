#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "implab/balance.hpp"
#include "implab/canonical.hpp"
#include "implab/graph.hpp"
#include "implab/impropriety.hpp"
#include "implab/local_profile.hpp"
#include "implab/recognition.hpp"

namespace implab {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A center z joined to every vertex of the parts, plus k pendant paths x-y-z.
struct BalSpec {
  int k = 0;
  std::vector<Graph> parts;

  int part_total() const {
    int s = 0;
    for (const auto& h : parts) s += h.order();
    return s;
  }
  int order() const { return 1 + part_total() + 2 * k; }

  friend bool operator==(const BalSpec&, const BalSpec&) = default;
};

namespace detail {

inline bool part_less(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  const bool ca = a.is_clique(a.vertices());
  const bool cb = b.is_clique(b.vertices());
  if (ca != cb) return cb;
  return canonical_form(a).key() < canonical_form(b).key();
}

inline int max_part_order(const BalSpec& s) {
  int m = 0;
  for (const auto& h : s.parts) m = std::max(m, h.order());
  return m;
}

inline int max_order_clique_parts(const BalSpec& s) {
  const int m = max_part_order(s);
  return static_cast<int>(std::count_if(s.parts.begin(), s.parts.end(), [&](const Graph& h) {
    return h.order() == m && h.is_clique(h.vertices());
  }));
}

}  // namespace detail

/// Parts in canonical labeling, ascending by order, cliques last within an order.
inline BalSpec normalized(BalSpec s) {
  for (auto& h : s.parts) h = canonical_form(h).graph;
  std::sort(s.parts.begin(), s.parts.end(), detail::part_less);
  return s;
}

/// Construction-level validity. Throws SpecError.
inline void validate_spec(const BalSpec& s) {
  if (s.k < 0 || s.k > 2) throw SpecError("k must be 0, 1 or 2");
  if (s.parts.empty()) throw SpecError("at least one part is required");
  for (const auto& h : s.parts) {
    if (h.order() == 0 || !is_connected(h)) throw SpecError("parts must be nonempty and connected");
    if (!std::holds_alternative<CliqueOrdering>(is_interval(h))) throw SpecError("parts must be interval graphs");
  }
  if (s.k >= 1 && detail::max_part_order(s) < 2)
    throw SpecError("k >= 1 requires a part with at least two vertices");
  if (s.order() > Graph::kMaxVertices) throw SpecError("spec exceeds 64 vertices");
}

/// Name of the first unmet criticality clause, or empty when the clique conditions hold.
inline std::string unmet_clause(const BalSpec& s) {
  if (s.k >= 1 && detail::max_part_order(s) < 2) return "max-order";
  if (s.k == 0 && detail::max_order_clique_parts(s) < 3) return "a";
  if (s.k == 1 && detail::max_order_clique_parts(s) < 2) return "b";
  return "";
}

struct BalGraph {
  Graph graph;
  int center = 0;
};

/// Center is vertex 0, parts follow in spec order, then each pendant as y, x.
inline BalGraph bal_build(const BalSpec& s) {
  validate_spec(s);
  Graph g(s.order());
  int next = 1;
  for (const auto& h : s.parts) {
    for (int v = 0; v < h.order(); ++v) g.add_edge(0, next + v);
    for (auto [u, v] : h.edges()) g.add_edge(next + u, next + v);
    next += h.order();
  }
  for (int i = 0; i < s.k; ++i) {
    g.add_edge(0, next);
    g.add_edge(next, next + 1);
    next += 2;
  }
  return {g, 0};
}

/// Weight of the center: sum of the part orders minus the (2 - k) largest.
inline int predicted_imp(const BalSpec& s) {
  std::vector<int> orders;
  for (const auto& h : s.parts) orders.push_back(h.order());
  return weight_from_orders(orders, static_cast<int>(orders.size()) + s.k);
}

struct BalRejection {
  std::string clause;  // "shape", "max-order", "a", "b" or "interval"
  std::string reason;
  int candidate = -1;
};

using BalRecognition = std::variant<BalSpec, BalRejection>;

namespace detail {

/// Shape at z: exterior components are pendant pairs, at most two of them.
inline std::optional<BalSpec> bal_shape_at(const Graph& g, int z, std::string& reason) {
  auto prof = local_components(g, z);
  BalSpec s;
  for (const auto& comp : prof.components) {
    if (comp.exterior) {
      if (comp.order != 2) {
        reason = "exterior component of order " + std::to_string(comp.order) + " at vertex " + std::to_string(z);
        return std::nullopt;
      }
      ++s.k;
    } else {
      s.parts.push_back(induced_subgraph(g, comp.vertices).graph);
    }
  }
  if (s.k > 2) {
    reason = "vertex " + std::to_string(z) + " has more than two exterior components";
    return std::nullopt;
  }
  if (s.parts.empty()) {
    reason = "vertex " + std::to_string(z) + " has no parts";
    return std::nullopt;
  }
  return s;
}

}  // namespace detail

/// Recover the BAL spec of a connected graph. Candidates are tried in ascending id; the
/// first whose shape and clause conditions both hold wins. Otherwise the rejection
/// reports the first candidate with the right shape, or a shape failure.
inline BalRecognition is_bal_form(const Graph& g) {
  if (!is_connected(g) || g.order() == 0) return BalRejection{"shape", "graph is not connected", -1};
  if (!std::holds_alternative<CliqueOrdering>(is_interval(g)))
    return BalRejection{"interval", "graph is not interval", -1};
  std::optional<BalRejection> first_clause_failure;
  for (int z = 0; z < g.order(); ++z) {
    std::string reason;
    auto spec = detail::bal_shape_at(g, z, reason);
    if (!spec) continue;
    BalSpec s = normalized(std::move(*spec));
    const std::string clause = unmet_clause(s);
    if (clause.empty()) return s;
    if (!first_clause_failure) {
      std::string why = clause == "max-order" ? "every part is a single vertex"
                        : clause == "a"       ? "fewer than three maximum-order clique parts"
                                              : "fewer than two maximum-order clique parts";
      first_clause_failure = BalRejection{clause, why + " at center " + std::to_string(z), z};
    }
  }
  if (first_clause_failure) return *first_clause_failure;
  return BalRejection{"shape", "no vertex has only pendant-pair exterior components", -1};
}

/// Builds the spec's graph and confirms it is balanced and critical at predicted_imp.
/// Refuses graphs above `max_order` vertices with GuardError.
inline CheckResult verify_bal_spec(const BalSpec& spec, int max_order = 16) {
  validate_spec(spec);
  if (const auto clause = unmet_clause(spec); !clause.empty())
    throw SpecError("spec fails clause " + clause);
  if (spec.order() > max_order)
    throw GuardError("spec builds " + std::to_string(spec.order()) + " vertices, guard is " +
                     std::to_string(max_order));
  const auto built = bal_build(spec);
  const auto r = balance_report(built.graph);
  const int predicted = predicted_imp(spec);
  CheckResult c{CheckResult::Status::Pass, "bal-forward", "", {}};
  c.detail = "wt " + std::to_string(r.wt) + ", imp " + std::to_string(r.imp) + ", predicted " +
             std::to_string(predicted) + (r.critical ? ", critical" : ", not critical");
  if (!(r.balanced && r.imp == predicted && r.critical)) {
    c.status = CheckResult::Status::Fail;
    for (int v = 0; v < static_cast<int>(r.deletion_imps.size()); ++v)
      if (r.deletion_imps[static_cast<std::size_t>(v)] >= r.imp) c.offending.push_back(vset::single(v));
  }
  return c;
}

}  // namespace implab
