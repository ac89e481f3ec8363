#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "implab/graph.hpp"

namespace implab {

/// Canonical labeling by equitable refinement plus individualization search.
///
/// Leaves of the search tree are discrete ordered partitions; each yields a relabeled
/// adjacency code and the lexicographically greatest code wins. Automorphisms discovered
/// at leaves prune the tree: siblings in the same orbit (of automorphisms fixing the
/// current path) are skipped, and a leaf equivalent to the first leaf jumps back to the
/// first-path node it branched from. Exact for any order, fast at desk scale.
struct CanonicalForm {
  Graph graph;                // g relabeled so that vertex v becomes position[v]
  std::vector<int> position;  // vertex -> canonical position
  std::vector<int> colors;    // color of each canonical position (empty when uncolored)
  std::vector<std::vector<int>> automorphisms;  // generators found during the search

  /// Comparable key: equal iff the (colored) inputs are isomorphic.
  struct Key {
    int n = 0;
    std::vector<int> colors;
    std::vector<VertexSet> rows;
    auto operator<=>(const Key&) const = default;
    bool operator==(const Key&) const = default;
  };

  Key key() const { return Key{graph.order(), colors, rows()}; }

  std::vector<VertexSet> rows() const {
    std::vector<VertexSet> r(static_cast<std::size_t>(graph.order()));
    for (int v = 0; v < graph.order(); ++v) r[static_cast<std::size_t>(v)] = graph.neighbors(v);
    return r;
  }
};

namespace detail {

using Cells = std::vector<VertexSet>;

/// Splits cells until equitable w.r.t. every cell; fragments ordered by neighbor count.
inline void refine(const Graph& g, Cells& cells, std::vector<VertexSet> splitters) {
  while (!splitters.empty()) {
    const VertexSet w = splitters.back();
    splitters.pop_back();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const VertexSet x = cells[i];
      if (vset::size(x) == 1) continue;
      std::vector<std::pair<int, VertexSet>> groups;
      vset::for_each(x, [&](int v) {
        const int c = vset::size(g.neighbors(v) & w);
        auto it = std::find_if(groups.begin(), groups.end(), [c](auto& p) { return p.first == c; });
        if (it == groups.end())
          groups.emplace_back(c, vset::single(v));
        else
          it->second |= vset::single(v);
      });
      if (groups.size() == 1) continue;
      std::sort(groups.begin(), groups.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(i));
      for (std::size_t k = 0; k < groups.size(); ++k) {
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(i + k), groups[k].second);
        splitters.push_back(groups[k].second);
      }
      i += groups.size() - 1;
    }
  }
}

class CanonSearch {
 public:
  CanonSearch(const Graph& g, const std::vector<int>& colors) : g_(g), n_(g.order()) {
    std::vector<int> distinct = colors;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int c : distinct) {
      VertexSet cell = 0;
      for (int v = 0; v < n_; ++v)
        if (colors[static_cast<std::size_t>(v)] == c) cell |= vset::single(v);
      root_.push_back(cell);
    }
    refine(g_, root_, root_);
  }

  void run() {
    std::vector<int> path;
    dfs(root_, path);
  }

  const std::vector<int>& best_lab() const { return best_lab_; }
  const std::vector<std::vector<int>>& automorphisms() const { return auts_; }

 private:
  static constexpr int kContinue = 1 << 30;

  std::vector<VertexSet> code_of(const std::vector<int>& lab) const {
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])] = i;
    std::vector<VertexSet> rows(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      vset::for_each(g_.neighbors(lab[static_cast<std::size_t>(i)]), [&](int u) {
        rows[static_cast<std::size_t>(i)] |= vset::single(pos[static_cast<std::size_t>(u)]);
      });
    }
    return rows;
  }

  void record_automorphism(const std::vector<int>& from_lab, const std::vector<int>& to_lab) {
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i)
      gamma[static_cast<std::size_t>(from_lab[static_cast<std::size_t>(i)])] =
          to_lab[static_cast<std::size_t>(i)];
    bool identity = true;
    for (int v = 0; v < n_; ++v) identity = identity && gamma[static_cast<std::size_t>(v)] == v;
    if (!identity) auts_.push_back(std::move(gamma));
  }

  int leaf(const Cells& cells, const std::vector<int>& path) {
    std::vector<int> lab;
    lab.reserve(cells.size());
    for (VertexSet c : cells) lab.push_back(vset::lowest(c));
    auto code = code_of(lab);
    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = lab;
      first_code_ = best_code_ = std::move(code);
      first_path_ = path;
      return kContinue;
    }
    if (code == first_code_) {
      record_automorphism(first_lab_, lab);
      std::size_t common = 0;
      while (common < path.size() && common < first_path_.size() && path[common] == first_path_[common])
        ++common;
      return static_cast<int>(common);
    }
    if (code == best_code_) {
      record_automorphism(best_lab_, lab);
    } else if (code > best_code_) {
      best_lab_ = lab;
      best_code_ = std::move(code);
    }
    return kContinue;
  }

  /// Union-find orbits of the automorphisms that fix every path vertex.
  std::vector<int> orbits_fixing(const std::vector<int>& path) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (const auto& gamma : auts_) {
      bool fixes = true;
      for (int v : path) fixes = fixes && gamma[static_cast<std::size_t>(v)] == v;
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v);
        int b = find(gamma[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(v);
    return parent;
  }

  int dfs(const Cells& cells, std::vector<int>& path) {
    if (static_cast<int>(cells.size()) == n_) return leaf(cells, path);
    std::size_t target = 0;
    int target_size = n_ + 1;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const int s = vset::size(cells[i]);
      if (s > 1 && s < target_size) {
        target = i;
        target_size = s;
      }
    }
    const int depth = static_cast<int>(path.size());
    std::vector<int> explored;
    for (int v : vset::members(cells[target])) {
      if (!explored.empty()) {
        auto orbit = orbits_fixing(path);
        bool seen = std::any_of(explored.begin(), explored.end(), [&](int u) {
          return orbit[static_cast<std::size_t>(u)] == orbit[static_cast<std::size_t>(v)];
        });
        if (seen) continue;
      }
      Cells child = cells;
      child[target] &= ~vset::single(v);
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), vset::single(v));
      refine(g_, child, {vset::single(v)});
      path.push_back(v);
      const int r = dfs(child, path);
      path.pop_back();
      explored.push_back(v);
      if (r < depth) return r;
    }
    return kContinue;
  }

  const Graph& g_;
  int n_;
  Cells root_;
  std::vector<int> first_lab_, best_lab_, first_path_;
  std::vector<VertexSet> first_code_, best_code_;
  std::vector<std::vector<int>> auts_;
};

}  // namespace detail

/// Canonical form of a vertex-colored graph; colors[v] partitions the vertices and is
/// part of the key (vertices only map onto vertices of equal color).
inline CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.order())
    throw std::invalid_argument("color vector length does not match graph order");
  CanonicalForm out;
  if (g.order() == 0) return out;
  detail::CanonSearch search(g, colors);
  search.run();
  const auto& lab = search.best_lab();
  out.position.assign(static_cast<std::size_t>(g.order()), 0);
  for (int i = 0; i < g.order(); ++i) out.position[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])] = i;
  out.graph = permute(g, out.position);
  bool uniform = std::all_of(colors.begin(), colors.end(), [&](int c) { return c == colors.front(); });
  if (!uniform) {
    out.colors.resize(colors.size());
    for (int i = 0; i < g.order(); ++i)
      out.colors[static_cast<std::size_t>(i)] = colors[static_cast<std::size_t>(lab[static_cast<std::size_t>(i)])];
  }
  out.automorphisms = search.automorphisms();
  return out;
}

inline CanonicalForm canonical_form(const Graph& g) {
  return canonical_form(g, std::vector<int>(static_cast<std::size_t>(g.order()), 0));
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).key() == canonical_form(b).key();
}

/// True iff some automorphism of g maps u to v.
inline bool same_orbit(const Graph& g, int u, int v) {
  if (u == v) return true;
  std::vector<int> cu(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> cv = cu;
  cu[static_cast<std::size_t>(u)] = 1;
  cv[static_cast<std::size_t>(v)] = 1;
  return canonical_form(g, cu).key() == canonical_form(g, cv).key();
}

}  // namespace implab
