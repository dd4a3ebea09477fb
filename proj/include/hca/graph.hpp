#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace hca {

using Bits = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// A subset of {0, ..., 63} stored as one machine word.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(Bits rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Bits rest_ = 0;
  };

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Bits bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> members) {
    for (int v : members) insert(v);
  }

  static VertexSet from(std::span<const int> members) {
    VertexSet s;
    for (int v : members) s.insert(v);
    return s;
  }
  /// {0, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1);
  }
  static constexpr VertexSet single(int v) { return VertexSet(Bits{1} << v); }

  constexpr Bits bits() const { return bits_; }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr void insert(int v) { bits_ |= Bits{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(Bits{1} << v); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<int> members() const { return {begin(), end()}; }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator-=(VertexSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  constexpr bool operator==(const VertexSet&) const = default;

 private:
  Bits bits_ = 0;
};

/// Lexicographic order on sorted member lists; used wherever a
/// deterministic listing of sets is required.
bool lex_less(VertexSet a, VertexSet b);

std::string to_string(VertexSet s);

/// Simple undirected graph on vertices 0..n-1, n <= 64, one bitset row per
/// vertex. Symmetric and loop-free by construction.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices. Throws InputError if n is out of range.
  explicit Graph(int n);

  int order() const { return n_; }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::range(n_); }

  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  VertexSet closed_neighbors(int v) const { return VertexSet(adj_[v] | (Bits{1} << v)); }
  /// Vertices other than v that are not adjacent to v.
  VertexSet non_neighbors(int v) const { return vertices() - closed_neighbors(v); }
  int degree(int v) const { return std::popcount(adj_[v]); }

  bool is_clique(VertexSet s) const;
  bool is_independent(VertexSet s) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// Throws InputError on out-of-range endpoints or u == v.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  void set_adjacent(int u, int v, bool on) {
    if (on) {
      add_edge(u, v);
    } else {
      remove_edge(u, v);
    }
  }

  bool operator==(const Graph& other) const;

 private:
  int n_ = 0;
  std::array<Bits, kMaxVertices> adj_{};
};

/// Builds a graph from an edge list; duplicates are merged.
Graph build_graph(int n, std::span<const std::pair<int, int>> edges);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges);

Graph complement(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// to_parent[i] is the vertex of the original graph that became vertex i.
  std::vector<int> to_parent;
};

/// G[S] with vertices renumbered in increasing order of their original ids.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

/// G - v, convenience wrapper over induced_subgraph.
InducedSubgraph delete_vertex(const Graph& g, int v);

/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// G + K1, written G* in the literature.
Graph with_isolated_vertex(const Graph& g);

/// G plus one vertex adjacent to everything.
Graph with_universal_vertex(const Graph& g);

/// Default cap on the number of maximal cliques listed.
inline constexpr std::size_t kMaxCliques = 1U << 16;

/// All maximal cliques, each as a VertexSet, sorted by lex_less.
/// Throws BoundExceeded when more than `limit` cliques exist.
std::vector<VertexSet> maximal_cliques(const Graph& g, std::size_t limit = kMaxCliques);

}  // namespace hca
