#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "implab/graph.hpp"
#include "implab/recognition.hpp"

namespace implab {

enum class Side { Left, Right };

struct Endpoint {
  int vertex = 0;
  Side side = Side::Left;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// Linear order of 2n endpoint events; positions are distinct, so containment is strict.
class IntervalModel {
 public:
  IntervalModel() = default;

  /// Throws std::invalid_argument unless every vertex 0..n-1 has exactly one left
  /// event followed later by its right event.
  explicit IntervalModel(std::vector<Endpoint> events) : events_(std::move(events)) {
    if (events_.size() % 2 != 0) throw std::invalid_argument("odd number of endpoint events");
    const int n = static_cast<int>(events_.size() / 2);
    left_.assign(static_cast<std::size_t>(n), -1);
    right_.assign(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < events_.size(); ++i) {
      const auto [v, side] = events_[i];
      if (v < 0 || v >= n) throw std::invalid_argument("event names vertex " + std::to_string(v) + " outside 0.." + std::to_string(n - 1));
      auto& slot = side == Side::Left ? left_ : right_;
      if (slot[static_cast<std::size_t>(v)] >= 0)
        throw std::invalid_argument("duplicate endpoint for vertex " + std::to_string(v));
      slot[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    for (int v = 0; v < n; ++v) {
      if (left_[static_cast<std::size_t>(v)] > right_[static_cast<std::size_t>(v)])
        throw std::invalid_argument("right endpoint precedes left endpoint for vertex " + std::to_string(v));
    }
  }

  int order() const { return static_cast<int>(left_.size()); }
  const std::vector<Endpoint>& events() const { return events_; }
  int left(int v) const { return left_[static_cast<std::size_t>(v)]; }
  int right(int v) const { return right_[static_cast<std::size_t>(v)]; }

  bool intersects(int u, int v) const { return left(u) < right(v) && left(v) < right(u); }

  /// I_inner strictly inside I_outer.
  bool contains(int outer, int inner) const {
    return left(outer) < left(inner) && right(inner) < right(outer);
  }

  bool realizes(const Graph& g) const {
    if (g.order() != order()) return false;
    for (int u = 0; u < order(); ++u)
      for (int v = u + 1; v < order(); ++v)
        if (intersects(u, v) != g.adjacent(u, v)) return false;
    return true;
  }

  friend bool operator==(const IntervalModel& a, const IntervalModel& b) { return a.events_ == b.events_; }

 private:
  std::vector<Endpoint> events_;
  std::vector<int> left_, right_;
};

/// Intersection graph of closed real intervals; vertex i is intervals[i].
inline Graph interval_graph(const std::vector<std::pair<double, double>>& intervals) {
  const int n = static_cast<int>(intervals.size());
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    const auto [a, b] = intervals[static_cast<std::size_t>(i)];
    if (a > b) throw std::invalid_argument("interval " + std::to_string(i) + " has left end after right end");
    for (int j = i + 1; j < n; ++j) {
      const auto [c, d] = intervals[static_cast<std::size_t>(j)];
      if (a <= d && c <= b) g.add_edge(i, j);
    }
  }
  return g;
}

struct ModelImpropriety {
  std::vector<int> per_vertex;  // number of intervals strictly inside each interval
  int max = 0;
};

inline ModelImpropriety impropriety_of_model(const IntervalModel& m) {
  ModelImpropriety out;
  out.per_vertex.assign(static_cast<std::size_t>(m.order()), 0);
  for (int z = 0; z < m.order(); ++z) {
    int count = 0;
    for (int v = 0; v < m.order(); ++v)
      if (v != z && m.contains(z, v)) ++count;
    out.per_vertex[static_cast<std::size_t>(z)] = count;
    out.max = std::max(out.max, count);
  }
  return out;
}

/// Per-vertex count of ranges strictly nested on both sides; the minimum impropriety of
/// any model whose clique order is `o`.
inline std::vector<int> nesting_counts(const CliqueOrdering& o) {
  const std::size_t n = o.ranges.size();
  std::vector<int> counts(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u < n; ++u)
      if (o.ranges[v].first < o.ranges[u].first && o.ranges[u].second < o.ranges[v].second) ++counts[v];
  return counts;
}

inline int imp_of_clique_order(const Graph& g, const CliqueOrdering& o) {
  if (!validate_ordering(g, o)) throw std::invalid_argument("clique ordering does not match graph");
  auto counts = nesting_counts(o);
  return counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
}

/// Concrete model attaining imp_of_clique_order. The gap before clique i holds the right
/// endpoints of vertices whose range ended at i-1, then the left endpoints of vertices
/// starting at i. Rights are ordered by ascending first index and lefts by ascending last
/// index (ties by id), so a shared-side pair never nests.
inline IntervalModel model_from_clique_order(const Graph& g, const CliqueOrdering& o) {
  if (!validate_ordering(g, o)) throw std::invalid_argument("clique ordering does not match graph");
  const int m = static_cast<int>(o.cliques.size());
  std::vector<Endpoint> events;
  events.reserve(static_cast<std::size_t>(2 * g.order()));
  for (int gap = 0; gap <= m; ++gap) {
    std::vector<std::tuple<int, int, int>> rights;
    std::vector<std::tuple<int, int, int>> lefts;
    for (int v = 0; v < g.order(); ++v) {
      auto [first, last] = o.ranges[static_cast<std::size_t>(v)];
      if (last == gap - 1) rights.emplace_back(first, v, v);
      if (first == gap) lefts.emplace_back(last, v, v);
    }
    std::sort(rights.begin(), rights.end());
    std::sort(lefts.begin(), lefts.end());
    for (auto& r : rights) events.push_back({std::get<2>(r), Side::Right});
    for (auto& l : lefts) events.push_back({std::get<2>(l), Side::Left});
  }
  return IntervalModel(std::move(events));
}

/// One line per interval, columns aligned to event positions.
inline std::string ascii_diagram(const IntervalModel& m) {
  std::ostringstream out;
  const int width = static_cast<int>(m.events().size());
  const int label = static_cast<int>(std::to_string(std::max(0, m.order() - 1)).size());
  for (int v = 0; v < m.order(); ++v) {
    std::string row(static_cast<std::size_t>(width), ' ');
    for (int i = m.left(v); i <= m.right(v); ++i) row[static_cast<std::size_t>(i)] = '-';
    row[static_cast<std::size_t>(m.left(v))] = '[';
    row[static_cast<std::size_t>(m.right(v))] = ']';
    while (!row.empty() && row.back() == ' ') row.pop_back();
    std::string id = std::to_string(v);
    out << std::string(static_cast<std::size_t>(label) - id.size(), ' ') << id << " |" << row << '\n';
  }
  return out.str();
}

/// Drawing rows: intervals grouped by nesting depth, first-fit within a depth.
inline std::vector<int> layout_rows(const IntervalModel& m) {
  const int n = m.order();
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (m.contains(u, v)) ++depth[static_cast<std::size_t>(v)];
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::pair(depth[static_cast<std::size_t>(a)], m.left(a)) < std::pair(depth[static_cast<std::size_t>(b)], m.left(b));
  });
  std::vector<int> row(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> occupants;
  int base = 0;
  int current_depth = -1;
  int rows_at_depth = 0;
  for (int v : order) {
    if (depth[static_cast<std::size_t>(v)] != current_depth) {
      base += rows_at_depth;
      rows_at_depth = 0;
      current_depth = depth[static_cast<std::size_t>(v)];
    }
    int r = 0;
    while (true) {
      if (r >= rows_at_depth) {
        occupants.emplace_back();
        ++rows_at_depth;
      }
      auto& occ = occupants[static_cast<std::size_t>(base + r)];
      bool clash = std::any_of(occ.begin(), occ.end(), [&](int u) { return m.intersects(u, v); });
      if (!clash) {
        occ.push_back(v);
        row[static_cast<std::size_t>(v)] = base + r;
        break;
      }
      ++r;
    }
  }
  return row;
}

inline std::string svg_diagram(const IntervalModel& m) {
  constexpr int kStep = 24;
  constexpr int kRowGap = 22;
  constexpr int kMargin = 20;
  auto rows = layout_rows(m);
  const int nrows = rows.empty() ? 1 : *std::max_element(rows.begin(), rows.end()) + 1;
  const int width = 2 * kMargin + kStep * std::max(1, static_cast<int>(m.events().size()) - 1);
  const int height = 2 * kMargin + kRowGap * nrows;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int v = 0; v < m.order(); ++v) {
    const int x1 = kMargin + kStep * m.left(v);
    const int x2 = kMargin + kStep * m.right(v);
    const int y = height - kMargin - kRowGap * rows[static_cast<std::size_t>(v)];
    out << "  <line x1=\"" << x1 << "\" y1=\"" << y << "\" x2=\"" << x2 << "\" y2=\"" << y
        << "\" stroke=\"black\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
    out << "  <text x=\"" << (x1 + x2) / 2 << "\" y=\"" << y - 5
        << "\" font-size=\"10\" text-anchor=\"middle\">" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace implab
