#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "implab/graph.hpp"

namespace implab {

/// Maximal cliques in a consecutive arrangement (a clique model of an interval graph).
struct CliqueOrdering {
  std::vector<VertexSet> cliques;
  std::vector<std::pair<int, int>> ranges;  // per vertex: first and last clique index

  friend bool operator==(const CliqueOrdering&, const CliqueOrdering&) = default;
};

struct NonIntervalWitness {
  enum class Kind { ChordlessCycle, AsteroidalTriple };
  Kind kind = Kind::ChordlessCycle;
  std::vector<int> vertices;  // cycle in traversal order, or the triple ascending
  // For an asteroidal triple (a, b, c): paths a..b avoiding N[c], b..c avoiding N[a],
  // a..c avoiding N[b].
  std::array<std::vector<int>, 3> paths;
};

inline const char* to_string(NonIntervalWitness::Kind k) {
  return k == NonIntervalWitness::Kind::ChordlessCycle ? "chordless-cycle" : "asteroidal-triple";
}

/// Raised by operations that require an interval (or chordal) input.
class NotIntervalError : public std::runtime_error {
 public:
  explicit NotIntervalError(NonIntervalWitness w)
      : std::runtime_error(std::string("graph is not interval: ") + to_string(w.kind) + " witness"),
        witness_(std::move(w)) {}
  const NonIntervalWitness& witness() const { return witness_; }

 private:
  NonIntervalWitness witness_;
};

class NotChordalError : public NotIntervalError {
 public:
  using NotIntervalError::NotIntervalError;
};

namespace detail {

inline bool lex_less(VertexSet a, VertexSet b) { return vset::members(a) < vset::members(b); }

inline std::vector<int> shortest_path(const Graph& g, int from, int to, VertexSet allowed) {
  if (!vset::contains(allowed, from) || !vset::contains(allowed, to)) return {};
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
  VertexSet seen = vset::single(from);
  std::vector<int> queue{from};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    if (v == to) break;
    vset::for_each(g.neighbors(v) & allowed & ~seen, [&](int w) {
      seen |= vset::single(w);
      parent[static_cast<std::size_t>(w)] = v;
      queue.push_back(w);
    });
  }
  if (!vset::contains(seen, to)) return {};
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

/// Extends induced paths from `s` through larger vertices; records every chordless cycle.
inline void chordless_cycles_from(const Graph& g, int s, std::vector<int>& path, VertexSet on_path,
                                  std::optional<std::vector<int>>& best) {
  const int tail = path.back();
  const VertexSet above = ~vset::range(s + 1);
  vset::for_each(g.neighbors(tail) & above & ~on_path, [&](int w) {
    // w may touch only the tail and possibly s.
    const VertexSet touch = g.neighbors(w) & on_path & ~vset::single(tail) & ~vset::single(s);
    if (touch != 0) return;
    if (path.size() > 1 && g.adjacent(w, s)) {
      if (path.size() < 3) return;
      std::vector<int> cycle = path;
      cycle.push_back(w);
      std::vector<int> sorted = cycle;
      std::sort(sorted.begin(), sorted.end());
      if (!best) {
        best = cycle;
      } else {
        std::vector<int> best_sorted = *best;
        std::sort(best_sorted.begin(), best_sorted.end());
        if (sorted < best_sorted) best = cycle;
      }
      return;
    }
    path.push_back(w);
    chordless_cycles_from(g, s, path, on_path | vset::single(w), best);
    path.pop_back();
  });
}

}  // namespace detail

/// Chordless cycle of length >= 4 with the lexicographically least vertex set, if any.
inline std::optional<std::vector<int>> find_chordless_cycle(const Graph& g) {
  for (int s = 0; s < g.order(); ++s) {
    std::optional<std::vector<int>> best;
    std::vector<int> path{s};
    detail::chordless_cycles_from(g, s, path, vset::single(s), best);
    if (best) return best;
  }
  return std::nullopt;
}

/// Asteroidal triple with the lexicographically least vertex set, if any.
inline std::optional<NonIntervalWitness> find_asteroidal_triple(const Graph& g) {
  const int n = g.order();
  const VertexSet all = g.vertices();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (g.adjacent(a, b)) continue;
      for (int c = b + 1; c < n; ++c) {
        if (g.adjacent(a, c) || g.adjacent(b, c)) continue;
        auto ab = detail::shortest_path(g, a, b, all & ~g.closed_neighbors(c));
        if (ab.empty()) continue;
        auto bc = detail::shortest_path(g, b, c, all & ~g.closed_neighbors(a));
        if (bc.empty()) continue;
        auto ac = detail::shortest_path(g, a, c, all & ~g.closed_neighbors(b));
        if (ac.empty()) continue;
        NonIntervalWitness w;
        w.kind = NonIntervalWitness::Kind::AsteroidalTriple;
        w.vertices = {a, b, c};
        w.paths = {ab, bc, ac};
        return w;
      }
    }
  }
  return std::nullopt;
}

inline bool verify_witness(const Graph& g, const NonIntervalWitness& w) {
  for (int v : w.vertices)
    if (!g.valid(v)) return false;
  if (w.kind == NonIntervalWitness::Kind::ChordlessCycle) {
    const auto& c = w.vertices;
    const std::size_t k = c.size();
    if (k < 4) return false;
    if (vset::size(vset::from(c)) != static_cast<int>(k)) return false;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
        if (g.adjacent(c[i], c[j]) != consecutive) return false;
      }
    }
    return true;
  }
  if (w.vertices.size() != 3) return false;
  const int t[3] = {w.vertices[0], w.vertices[1], w.vertices[2]};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (t[i] == t[j] || g.adjacent(t[i], t[j])) return false;
  // paths[0]: t0..t1 avoiding t2; paths[1]: t1..t2 avoiding t0; paths[2]: t0..t2 avoiding t1.
  const int ends[3][3] = {{t[0], t[1], t[2]}, {t[1], t[2], t[0]}, {t[0], t[2], t[1]}};
  for (int i = 0; i < 3; ++i) {
    const auto& p = w.paths[static_cast<std::size_t>(i)];
    if (p.empty() || p.front() != ends[i][0] || p.back() != ends[i][1]) return false;
    const VertexSet forbidden = g.closed_neighbors(ends[i][2]);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (!g.valid(p[k]) || vset::contains(forbidden, p[k])) return false;
      if (k > 0 && !g.adjacent(p[k - 1], p[k])) return false;
    }
  }
  return true;
}

/// Maximal cliques of a chordal graph, sorted by their ascending member lists.
/// Throws NotChordalError carrying a chordless cycle otherwise.
inline std::vector<VertexSet> maximal_cliques(const Graph& g) {
  const int n = g.order();
  // Maximum cardinality search, ties to the lowest id; the reverse visit order is a
  // perfect elimination ordering iff g is chordal.
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<int> visit;
  VertexSet unvisited = g.vertices();
  while (unvisited != 0) {
    int pick = -1;
    vset::for_each(unvisited, [&](int v) {
      if (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]) pick = v;
    });
    visit.push_back(pick);
    unvisited &= ~vset::single(pick);
    vset::for_each(g.neighbors(pick) & unvisited, [&](int w) { ++weight[static_cast<std::size_t>(w)]; });
  }
  std::vector<VertexSet> candidates;
  VertexSet earlier = 0;
  for (int v : visit) {
    const VertexSet back = g.neighbors(v) & earlier;
    if (!g.is_clique(back)) {
      NonIntervalWitness w;
      w.vertices = *find_chordless_cycle(g);
      throw NotChordalError(std::move(w));
    }
    candidates.push_back(back | vset::single(v));
    earlier |= vset::single(v);
  }
  std::vector<VertexSet> out;
  for (VertexSet c : candidates) {
    bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                 [c](VertexSet d) { return d != c && (c & ~d) == 0; });
    if (!dominated && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), detail::lex_less);
  return out;
}

/// Search space of consecutive clique arrangements. A partial arrangement is a set of
/// placed cliques plus the last one placed; whether it can be completed is memoized on
/// that pair, so enumeration never enters a dead branch.
class ConsecutiveArrangements {
 public:
  static constexpr int kMaxCliques = 30;

  explicit ConsecutiveArrangements(std::vector<VertexSet> cliques) : cliques_(std::move(cliques)) {
    if (size() > kMaxCliques)
      throw std::invalid_argument("too many maximal cliques (" + std::to_string(size()) + ")");
  }

  int size() const { return static_cast<int>(cliques_.size()); }
  const std::vector<VertexSet>& cliques() const { return cliques_; }
  std::uint32_t full() const { return size() == 32 ? ~0U : (1U << size()) - 1; }

  VertexSet covered(std::uint32_t placed) const {
    VertexSet u = 0;
    for (int i = 0; i < size(); ++i)
      if (placed >> i & 1U) u |= cliques_[static_cast<std::size_t>(i)];
    return u;
  }

  /// Whether clique c may follow `last` (-1 at the start) without breaking consecutivity.
  bool can_append(std::uint32_t placed, int last, int c) const {
    if (placed >> c & 1U) return false;
    const VertexSet active = last < 0 ? 0 : cliques_[static_cast<std::size_t>(last)];
    const VertexSet finished = covered(placed) & ~active;
    const VertexSet next = cliques_[static_cast<std::size_t>(c)];
    if ((next & finished) != 0) return false;
    const VertexSet closing = active & ~next;
    const VertexSet rest = covered(full() & ~placed & ~(1U << c));
    return (closing & rest) == 0;
  }

  bool completable(std::uint32_t placed, int last) {
    if (placed == full()) return true;
    const std::uint64_t key = (std::uint64_t{placed} << 6) | static_cast<std::uint64_t>(last + 1);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = false;
    for (int c = 0; c < size() && !ok; ++c)
      ok = can_append(placed, last, c) && completable(placed | (1U << c), c);
    memo_.emplace(key, ok);
    return ok;
  }

  /// Children of a live partial arrangement that remain completable, ascending.
  std::vector<int> live_children(std::uint32_t placed, int last) {
    std::vector<int> out;
    for (int c = 0; c < size(); ++c)
      if (can_append(placed, last, c) && completable(placed | (1U << c), c)) out.push_back(c);
    return out;
  }

  CliqueOrdering materialize(const std::vector<int>& sequence, int n) const {
    CliqueOrdering o;
    o.ranges.assign(static_cast<std::size_t>(n), {-1, -1});
    for (std::size_t i = 0; i < sequence.size(); ++i) {
      const VertexSet c = cliques_[static_cast<std::size_t>(sequence[i])];
      o.cliques.push_back(c);
      vset::for_each(c, [&](int v) {
        auto& r = o.ranges[static_cast<std::size_t>(v)];
        if (r.first < 0) r.first = static_cast<int>(i);
        r.second = static_cast<int>(i);
      });
    }
    return o;
  }

 private:
  std::vector<VertexSet> cliques_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

/// Visits every consecutive ordering of g's maximal cliques in lexicographic order of
/// clique indices; the visitor returns false to stop early.
inline void for_each_consecutive_ordering(const Graph& g,
                                          const std::function<bool(const CliqueOrdering&)>& visit) {
  ConsecutiveArrangements space(maximal_cliques(g));
  if (g.order() > 0 && !space.completable(0, -1)) throw NotIntervalError(*find_asteroidal_triple(g));
  std::vector<int> seq;
  bool stop = false;
  std::function<void(std::uint32_t, int)> rec = [&](std::uint32_t placed, int last) {
    if (placed == space.full()) {
      stop = !visit(space.materialize(seq, g.order()));
      return;
    }
    for (int c : space.live_children(placed, last)) {
      seq.push_back(c);
      rec(placed | (1U << c), c);
      seq.pop_back();
      if (stop) return;
    }
  };
  if (g.order() > 0) rec(0, -1);
}

inline std::vector<CliqueOrdering> consecutive_orderings(const Graph& g) {
  std::vector<CliqueOrdering> out;
  for_each_consecutive_ordering(g, [&](const CliqueOrdering& o) {
    out.push_back(o);
    return true;
  });
  return out;
}

using IntervalResult = std::variant<CliqueOrdering, NonIntervalWitness>;

/// Certificate in both directions: a consecutive clique ordering or a verified witness.
/// Chordless cycles are reported before asteroidal triples.
inline IntervalResult is_interval(const Graph& g) {
  try {
    std::optional<CliqueOrdering> first;
    for_each_consecutive_ordering(g, [&](const CliqueOrdering& o) {
      first = o;
      return false;
    });
    if (!first) return CliqueOrdering{};
    return *first;
  } catch (const NotIntervalError& e) {
    return e.witness();
  }
}

inline bool interval(const Graph& g) { return std::holds_alternative<CliqueOrdering>(is_interval(g)); }

/// Throws NotIntervalError when g is not interval.
inline void require_interval(const Graph& g) {
  auto r = is_interval(g);
  if (auto* w = std::get_if<NonIntervalWitness>(&r)) throw NotIntervalError(*w);
}

/// Independent check of a clique ordering: listed sets are distinct maximal cliques,
/// every vertex occupies a consecutive range, and u ~ v iff their ranges intersect.
inline bool validate_ordering(const Graph& g, const CliqueOrdering& o) {
  const int n = g.order();
  if (static_cast<int>(o.ranges.size()) != n) return false;
  const int m = static_cast<int>(o.cliques.size());
  for (int i = 0; i < m; ++i) {
    const VertexSet c = o.cliques[static_cast<std::size_t>(i)];
    if (c == 0 || (c & ~g.vertices()) != 0 || !g.is_clique(c)) return false;
    for (int v = 0; v < n; ++v)
      if (!vset::contains(c, v) && (c & ~g.neighbors(v)) == 0) return false;  // not maximal
    for (int j = 0; j < i; ++j)
      if (o.cliques[static_cast<std::size_t>(j)] == c) return false;
  }
  for (int v = 0; v < n; ++v) {
    auto [first, last] = o.ranges[static_cast<std::size_t>(v)];
    if (first < 0 || first > last || last >= m) return false;
    for (int i = 0; i < m; ++i) {
      const bool inside = i >= first && i <= last;
      if (vset::contains(o.cliques[static_cast<std::size_t>(i)], v) != inside) return false;
    }
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      auto ru = o.ranges[static_cast<std::size_t>(u)];
      auto rv = o.ranges[static_cast<std::size_t>(v)];
      const bool meet = ru.first <= rv.second && rv.first <= ru.second;
      if (meet != g.adjacent(u, v)) return false;
    }
  }
  return true;
}

}  // namespace implab
