#pragma once

#include <algorithm>
#include <vector>

#include "implab/graph.hpp"

namespace implab {

struct LocalComponent {
  VertexSet vertices = 0;
  int order = 0;
  bool exterior = false;  // holds a vertex not adjacent to the center
};

/// Decomposition of g - center into local components.
struct LocalProfile {
  int center = 0;
  std::vector<LocalComponent> components;  // ordered by smallest member
  int n_components = 0;
  int n_exterior = 0;
  int weight = 0;
};

/// Sum of the (n_components - 2) smallest non-exterior orders; empty sum when n_components <= 2.
/// When fewer non-exterior orders exist than requested, all of them are summed.
inline int weight_from_orders(std::vector<int> non_exterior_orders, int n_components) {
  const int take = n_components - 2;
  if (take <= 0) return 0;
  std::sort(non_exterior_orders.begin(), non_exterior_orders.end());
  int sum = 0;
  for (int i = 0; i < take && i < static_cast<int>(non_exterior_orders.size()); ++i) {
    sum += non_exterior_orders[static_cast<std::size_t>(i)];
  }
  return sum;
}

/// Components of (component of z) - z. Other components of a disconnected graph do not count.
inline LocalProfile local_components(const Graph& g, int z) {
  g.require_vertex(z);
  LocalProfile p;
  p.center = z;
  const VertexSet nz = g.neighbors(z);
  std::vector<int> inner;
  const VertexSet home = reach(g, z, g.vertices());
  for (VertexSet c : components(g, home & ~vset::single(z))) {
    LocalComponent lc{c, vset::size(c), (c & ~nz) != 0};
    if (lc.exterior)
      ++p.n_exterior;
    else
      inner.push_back(lc.order);
    p.components.push_back(lc);
  }
  p.n_components = static_cast<int>(p.components.size());
  p.weight = weight_from_orders(std::move(inner), p.n_components);
  return p;
}

inline int weight_of_vertex(const Graph& g, int z) { return local_components(g, z).weight; }

inline int weight_of_graph(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, weight_of_vertex(g, v));
  return best;
}

/// Number of exterior components at z; at most 2 when g is interval.
inline int vertex_type(const Graph& g, int z) { return local_components(g, z).n_exterior; }

inline VertexSet positive_weight_vertices(const Graph& g) {
  VertexSet out = 0;
  for (int v = 0; v < g.order(); ++v)
    if (weight_of_vertex(g, v) > 0) out |= vset::single(v);
  return out;
}

}  // namespace implab
