#include "hca/graph.hpp"

#include <algorithm>
#include <sstream>

#include "hca/error.hpp"

namespace hca {

bool lex_less(VertexSet a, VertexSet b) {
  // Both sorted lists agree on every element below d, the smallest element of
  // the symmetric difference. The list holding d is smaller iff the other
  // list still has an element after that common prefix.
  Bits diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  int d = std::countr_zero(diff);
  Bits above = d == 63 ? 0 : ~((Bits{2} << d) - 1);
  if (a.contains(d)) return (b.bits() & above) != 0;
  return (a.bits() & above) == 0;
}

std::string to_string(VertexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v : s) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("vertex count " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxVertices));
  }
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
  return twice / 2;
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : s) {
    if (!(s - VertexSet::single(v)).subset_of(neighbors(v))) return false;
  }
  return true;
}

bool Graph::is_independent(VertexSet s) const {
  for (int v : s) {
    if (neighbors(v).intersects(s)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : VertexSet(adj_[u] & ~((Bits{2} << u) - 1))) out.emplace_back(u, v);
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                     ") has an endpoint outside 0.." + std::to_string(n_ - 1));
  }
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  adj_[u] |= Bits{1} << v;
  adj_[v] |= Bits{1} << u;
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
    throw InputError("invalid vertex pair (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  adj_[u] &= ~(Bits{1} << v);
  adj_[v] &= ~(Bits{1} << u);
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && std::equal(adj_.begin(), adj_.begin() + n_, other.adj_.begin());
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
  return build_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) c.add_edge(u, v);
    }
  }
  return c;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) {
    throw InputError("vertex set " + to_string(s) + " not contained in graph of order " +
                     std::to_string(g.order()));
  }
  InducedSubgraph out{Graph(s.size()), s.members()};
  const auto& map = out.to_parent;
  for (std::size_t i = 0; i < map.size(); ++i) {
    for (std::size_t j = i + 1; j < map.size(); ++j) {
      if (g.adjacent(map[i], map[j])) out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return out;
}

InducedSubgraph delete_vertex(const Graph& g, int v) {
  return induced_subgraph(g, g.vertices() - VertexSet::single(v));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
  return g;
}

Graph with_isolated_vertex(const Graph& g) { return disjoint_union(g, Graph(1)); }

Graph with_universal_vertex(const Graph& g) {
  Graph out = disjoint_union(g, Graph(1));
  for (int v = 0; v < g.order(); ++v) out.add_edge(v, g.order());
  return out;
}

namespace {

// Bron-Kerbosch with Tomita pivoting on word-sized sets.
void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, std::size_t limit,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    if (out.size() >= limit) {
      throw BoundExceeded("more than " + std::to_string(limit) + " maximal cliques");
    }
    out.push_back(r);
    return;
  }
  int pivot = -1;
  int best = -1;
  for (int u : p | x) {
    int c = (p & g.neighbors(u)).size();
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (int v : p - g.neighbors(pivot)) {
    VertexSet nv = g.neighbors(v);
    bron_kerbosch(g, r | VertexSet::single(v), p & nv, x & nv, limit, out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g, std::size_t limit) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  bron_kerbosch(g, VertexSet{}, g.vertices(), VertexSet{}, limit, out);
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace hca
