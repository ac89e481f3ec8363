#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace implab {

/// A set of vertex ids packed into a machine word; bit v set iff v is a member.
using VertexSet = std::uint64_t;

namespace vset {

inline constexpr VertexSet single(int v) { return VertexSet{1} << v; }

inline constexpr VertexSet range(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1U; }

inline constexpr int size(VertexSet s) { return std::popcount(s); }

inline constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

inline std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size(s)));
  for (; s != 0; s &= s - 1) out.push_back(lowest(s));
  return out;
}

inline VertexSet from(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= single(v);
  return s;
}

template <class F>
void for_each(VertexSet s, F&& f) {
  for (; s != 0; s &= s - 1) f(lowest(s));
}

}  // namespace vset

/// Simple undirected graph on dense ids 0..n-1 with bitset adjacency rows.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;

  explicit Graph(int n) : adj_(static_cast<std::size_t>(check_order(n)), 0) {}

  Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  int order() const { return static_cast<int>(adj_.size()); }

  VertexSet vertices() const { return vset::range(order()); }

  bool valid(int v) const { return v >= 0 && v < order(); }

  void require_vertex(int v) const {
    if (!valid(v)) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " out of range for graph of order " +
                                  std::to_string(order()));
    }
  }

  bool adjacent(int u, int v) const { return vset::contains(adj_[u], v); }

  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }

  /// Closed neighborhood N[v].
  VertexSet closed_neighbors(int v) const { return neighbors(v) | vset::single(v); }

  int degree(int v) const { return vset::size(neighbors(v)); }

  void add_edge(int u, int v) {
    require_vertex(u);
    require_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)] |= vset::single(v);
    adj_[static_cast<std::size_t>(v)] |= vset::single(u);
  }

  int edge_count() const {
    int twice = 0;
    for (VertexSet row : adj_) twice += vset::size(row);
    return twice / 2;
  }

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u) {
      vset::for_each(neighbors(u) & ~vset::range(u + 1), [&](int v) { out.emplace_back(u, v); });
    }
    return out;
  }

  bool is_clique(VertexSet s) const {
    bool ok = true;
    vset::for_each(s, [&](int v) { ok = ok && (s & ~neighbors(v)) == vset::single(v); });
    return ok;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static int check_order(int n) {
    if (n < 0 || n > kMaxVertices) {
      throw std::invalid_argument("graph order " + std::to_string(n) + " outside 0.." +
                                  std::to_string(kMaxVertices));
    }
    return n;
  }

  std::vector<VertexSet> adj_;
};

/// Induced subgraph with dense relabeling; original[i] is the id of new vertex i in the source.
struct Subgraph {
  Graph graph;
  std::vector<int> original;
};

inline Subgraph induced_subgraph(const Graph& g, VertexSet s) {
  s &= g.vertices();
  Subgraph out{Graph(vset::size(s)), vset::members(s)};
  for (int i = 0; i < out.graph.order(); ++i) {
    for (int j = i + 1; j < out.graph.order(); ++j) {
      if (g.adjacent(out.original[i], out.original[j])) out.graph.add_edge(i, j);
    }
  }
  return out;
}

inline Graph delete_vertex(const Graph& g, int v) {
  g.require_vertex(v);
  return induced_subgraph(g, g.vertices() & ~vset::single(v)).graph;
}

/// Vertices reachable from `start` without leaving `within`.
inline VertexSet reach(const Graph& g, int start, VertexSet within) {
  VertexSet seen = vset::single(start);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    vset::for_each(frontier, [&](int v) { next |= g.neighbors(v); });
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

/// Connected components of g restricted to `within`, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  within &= g.vertices();
  while (within != 0) {
    VertexSet c = reach(g, vset::lowest(within), within);
    out.push_back(c);
    within &= ~c;
  }
  return out;
}

inline std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

inline Graph permute(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.add_edge(u, v);
  for (auto [u, v] : b.edges()) out.add_edge(a.order() + u, a.order() + v);
  return out;
}

namespace named {

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

/// K_{1,leaves}; the center is vertex 0.
inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

/// K_{a,b}; the first side is 0..a-1.
inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

/// Spider with `legs` paths of `length` edges hanging off center 0.
inline Graph spider(int legs, int length) {
  Graph g(1 + legs * length);
  for (int leg = 0; leg < legs; ++leg) {
    int prev = 0;
    for (int i = 0; i < length; ++i) {
      int v = 1 + leg * length + i;
      g.add_edge(prev, v);
      prev = v;
    }
  }
  return g;
}

namespace detail {
inline bool parse_int(const std::string& s, int& out) {
  if (s.empty() || s.size() > 3) return false;
  out = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
    out = out * 10 + (c - '0');
  }
  return true;
}
}  // namespace detail

/// Parses "Kn", "Ka,b", "Pn", "Cn"; returns false when the name is not a primitive.
inline bool try_parse(const std::string& name, Graph& out) {
  if (name.size() < 2) return false;
  const char kind = name[0];
  const std::string rest = name.substr(1);
  int a = 0;
  int b = 0;
  try {
    if (kind == 'K') {
      auto comma = rest.find(',');
      if (comma != std::string::npos) {
        if (!detail::parse_int(rest.substr(0, comma), a) ||
            !detail::parse_int(rest.substr(comma + 1), b))
          return false;
        out = complete_bipartite(a, b);
        return true;
      }
      if (!detail::parse_int(rest, a)) return false;
      out = complete(a);
      return true;
    }
    if (kind == 'P' && detail::parse_int(rest, a)) {
      out = path(a);
      return true;
    }
    if (kind == 'C' && detail::parse_int(rest, a)) {
      out = cycle(a);
      return true;
    }
  } catch (const std::invalid_argument&) {
    return false;
  }
  return false;
}

}  // namespace named

}  // namespace implab
