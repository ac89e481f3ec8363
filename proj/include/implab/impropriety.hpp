#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "implab/graph.hpp"
#include "implab/interval_model.hpp"
#include "implab/local_profile.hpp"
#include "implab/recognition.hpp"

namespace implab {

/// Raised when an exhaustive routine is asked to exceed its size guard.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LowerBoundKind { Weight, ExhaustiveSearch };

inline const char* to_string(LowerBoundKind k) {
  return k == LowerBoundKind::Weight ? "weight" : "exhaustive-search";
}

struct ImproprietyCertificate {
  Graph graph;
  int p = 0;
  IntervalModel witness_model;
  int lower_bound = 0;
  LowerBoundKind lower_bound_kind = LowerBoundKind::Weight;
  std::vector<int> per_vertex;

  friend bool operator==(const ImproprietyCertificate& a, const ImproprietyCertificate& b) {
    return a.graph == b.graph && a.p == b.p && a.witness_model == b.witness_model &&
           a.lower_bound == b.lower_bound && a.lower_bound_kind == b.lower_bound_kind &&
           a.per_vertex == b.per_vertex;
  }
};

namespace detail {

/// Branch and bound over consecutive clique arrangements of a connected interval graph.
///
/// Bound for a prefix: a finished vertex's nesting count is final; an active vertex v
/// already holds every finished vertex that started after it, and will also hold every
/// unstarted vertex confined to v's remaining cliques except those in v's last clique.
class ArrangementSearch {
 public:
  ArrangementSearch(const Graph& g, int target)
      : n_(g.order()), target_(target), space_(maximal_cliques(g)) {
    for (int c = 0; c < space_.size(); ++c) {
      vset::for_each(space_.cliques()[static_cast<std::size_t>(c)], [&](int v) {
        cliques_of_[static_cast<std::size_t>(v)] |= 1U << c;
      });
    }
  }

  bool run() {
    if (n_ > 0 && !space_.completable(0, -1)) return false;
    first_.assign(static_cast<std::size_t>(n_), -1);
    last_.assign(static_cast<std::size_t>(n_), -1);
    search(0, -1);
    return true;
  }

  int best() const { return best_; }
  CliqueOrdering best_ordering() const { return space_.materialize(best_seq_, n_); }

 private:
  int bound(std::uint32_t placed, int last) const {
    const VertexSet active = last < 0 ? 0 : space_.cliques()[static_cast<std::size_t>(last)];
    int lb = 0;
    for (int v = 0; v < n_; ++v) {
      const int fv = first_[static_cast<std::size_t>(v)];
      if (fv < 0) continue;
      const bool v_active = vset::contains(active, v);
      int count = 0;
      for (int u = 0; u < n_; ++u) {
        const int fu = first_[static_cast<std::size_t>(u)];
        if (fu <= fv || vset::contains(active, u)) continue;
        const int lu = last_[static_cast<std::size_t>(u)];
        if (v_active || lu < last_[static_cast<std::size_t>(v)]) ++count;
      }
      if (v_active) {
        const std::uint32_t remaining = cliques_of_[static_cast<std::size_t>(v)] & ~placed;
        if (remaining != 0) {
          VertexSet confined = 0;
          for (int u = 0; u < n_; ++u) {
            if (first_[static_cast<std::size_t>(u)] < 0 &&
                (cliques_of_[static_cast<std::size_t>(u)] & ~remaining) == 0)
              confined |= vset::single(u);
          }
          int escape = 0;
          for (int c = 0; c < space_.size(); ++c)
            if (remaining >> c & 1U)
              escape = std::max(escape, vset::size(confined & space_.cliques()[static_cast<std::size_t>(c)]));
          count += vset::size(confined) - escape;
        }
      }
      lb = std::max(lb, count);
    }
    return lb;
  }

  void search(std::uint32_t placed, int last) {
    if (done_) return;
    if (placed == space_.full()) {
      const int value = bound(placed, last);
      if (value < best_) {
        best_ = value;
        best_seq_ = seq_;
        if (best_ <= target_) done_ = true;
      }
      return;
    }
    for (int c : space_.live_children(placed, last)) {
      const int pos = static_cast<int>(seq_.size());
      const VertexSet clique = space_.cliques()[static_cast<std::size_t>(c)];
      std::vector<int> started;
      vset::for_each(clique, [&](int v) {
        if (first_[static_cast<std::size_t>(v)] < 0) {
          first_[static_cast<std::size_t>(v)] = pos;
          started.push_back(v);
        }
      });
      std::vector<int> saved_last(last_);
      vset::for_each(clique, [&](int v) { last_[static_cast<std::size_t>(v)] = pos; });
      seq_.push_back(c);
      if (bound(placed | (1U << c), c) < best_) search(placed | (1U << c), c);
      seq_.pop_back();
      last_ = std::move(saved_last);
      for (int v : started) first_[static_cast<std::size_t>(v)] = -1;
      if (done_) return;
    }
  }

  int n_;
  int target_;
  ConsecutiveArrangements space_;
  std::vector<std::uint32_t> cliques_of_ = std::vector<std::uint32_t>(64, 0);
  std::vector<int> first_, last_, seq_, best_seq_;
  int best_ = std::numeric_limits<int>::max();
  bool done_ = false;
};

inline ImproprietyCertificate impropriety_connected(const Graph& g) {
  ImproprietyCertificate cert;
  cert.graph = g;
  const int wt = weight_of_graph(g);
  ArrangementSearch search(g, wt);
  if (!search.run()) throw NotIntervalError(*find_asteroidal_triple(g));
  const CliqueOrdering best = g.order() == 0 ? CliqueOrdering{} : search.best_ordering();
  cert.witness_model = model_from_clique_order(g, best);
  auto measured = impropriety_of_model(cert.witness_model);
  cert.p = measured.max;
  cert.per_vertex = std::move(measured.per_vertex);
  cert.lower_bound = cert.p;
  cert.lower_bound_kind = cert.p == wt ? LowerBoundKind::Weight : LowerBoundKind::ExhaustiveSearch;
  return cert;
}

}  // namespace detail

/// Exact impropriety: minimum over all interval models of the largest number of
/// intervals strictly inside one interval. Disconnected graphs take the maximum over
/// components, whose models are laid side by side.
inline ImproprietyCertificate impropriety(const Graph& g) {
  auto comps = components(g);
  if (comps.size() <= 1) return detail::impropriety_connected(g);
  ImproprietyCertificate cert;
  cert.graph = g;
  cert.per_vertex.assign(static_cast<std::size_t>(g.order()), 0);
  std::vector<Endpoint> events;
  for (VertexSet c : comps) {
    auto sub = induced_subgraph(g, c);
    auto part = detail::impropriety_connected(sub.graph);
    for (const Endpoint& e : part.witness_model.events())
      events.push_back({sub.original[static_cast<std::size_t>(e.vertex)], e.side});
    for (int i = 0; i < sub.graph.order(); ++i)
      cert.per_vertex[static_cast<std::size_t>(sub.original[static_cast<std::size_t>(i)])] =
          part.per_vertex[static_cast<std::size_t>(i)];
    cert.p = std::max(cert.p, part.p);
  }
  cert.witness_model = IntervalModel(std::move(events));
  cert.lower_bound = cert.p;
  cert.lower_bound_kind =
      cert.p == weight_of_graph(g) ? LowerBoundKind::Weight : LowerBoundKind::ExhaustiveSearch;
  return cert;
}

inline bool is_p_improper(const Graph& g, int p) { return impropriety(g).p <= p; }

/// Ground-truth impropriety by searching every endpoint order that realizes g.
/// Refuses graphs above `max_order` vertices.
inline int impropriety_bruteforce(const Graph& g, int max_order = 7) {
  const int n = g.order();
  if (n > max_order)
    throw GuardError("brute-force impropriety refused: order " + std::to_string(n) + " exceeds guard " +
                     std::to_string(max_order));
  if (n == 0) return 0;
  // Lower-id twins open first; any model can be relabeled within a twin class to comply.
  std::vector<VertexSet> earlier_twins(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      const bool true_twins = g.closed_neighbors(u) == g.closed_neighbors(v);
      const bool false_twins = g.neighbors(u) == g.neighbors(v);
      if (true_twins || false_twins) earlier_twins[static_cast<std::size_t>(v)] |= vset::single(u);
    }
  }
  const int floor = weight_of_graph(g);
  int best = std::numeric_limits<int>::max();
  std::vector<int> opened_at(static_cast<std::size_t>(n), -1);
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  VertexSet ever = 0;
  VertexSet open = 0;
  VertexSet closed = 0;
  int clock = 0;
  bool done = false;
  auto rec = [&](auto&& self) -> void {
    if (done) return;
    if (closed == g.vertices()) {
      best = *std::max_element(count.begin(), count.end());
      if (best <= floor) done = true;
      return;
    }
    for (int v = 0; v < n && !done; ++v) {
      if (vset::contains(ever, v)) continue;
      if ((earlier_twins[static_cast<std::size_t>(v)] & ~ever) != 0) continue;
      if ((open & ~g.neighbors(v)) != 0 || (closed & g.neighbors(v)) != 0) continue;
      ever |= vset::single(v);
      open |= vset::single(v);
      opened_at[static_cast<std::size_t>(v)] = clock++;
      self(self);
      --clock;
      open &= ~vset::single(v);
      ever &= ~vset::single(v);
    }
    for (int u = 0; u < n && !done; ++u) {
      if (!vset::contains(open, u) || (g.neighbors(u) & ~ever) != 0) continue;
      std::vector<int> bumped;
      bool dead = false;
      vset::for_each(open, [&](int w) {
        if (w != u && opened_at[static_cast<std::size_t>(w)] < opened_at[static_cast<std::size_t>(u)]) {
          bumped.push_back(w);
          if (++count[static_cast<std::size_t>(w)] >= best) dead = true;
        }
      });
      if (!dead) {
        open &= ~vset::single(u);
        closed |= vset::single(u);
        self(self);
        closed &= ~vset::single(u);
        open |= vset::single(u);
      }
      for (int w : bumped) --count[static_cast<std::size_t>(w)];
    }
  };
  rec(rec);
  if (best == std::numeric_limits<int>::max()) throw NotIntervalError(std::get<NonIntervalWitness>(is_interval(g)));
  return best;
}

}  // namespace implab
