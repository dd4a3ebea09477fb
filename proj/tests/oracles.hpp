#pragma once
// Brute-force references for tests. Only adjacency queries of the library
// are used; everything else is recomputed from definitions.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "hca/arc_model.hpp"
#include "hca/circular_ones.hpp"
#include "hca/graph.hpp"

namespace oracle {

using hca::Graph;

inline bool adjacent(const Graph& g, int a, int b) { return g.adjacent(a, b); }

inline bool is_clique_mask(const Graph& g, std::uint64_t mask) {
  for (int a = 0; a < g.order(); ++a) {
    if (!(mask >> a & 1)) continue;
    for (int b = a + 1; b < g.order(); ++b) {
      if ((mask >> b & 1) && !adjacent(g, a, b)) return false;
    }
  }
  return true;
}

// Every subset, kept when it is a clique no single vertex extends.
inline std::vector<std::uint64_t> maximal_cliques(const Graph& g) {
  std::vector<std::uint64_t> out;
  int n = g.order();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    if (!is_clique_mask(g, mask)) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v) {
      if (!(mask >> v & 1) && is_clique_mask(g, mask | std::uint64_t{1} << v)) maximal = false;
    }
    if (maximal) out.push_back(mask);
  }
  return out;
}

inline int edge_count(const Graph& g) {
  int m = 0;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a + 1; b < g.order(); ++b) m += adjacent(g, a, b) ? 1 : 0;
  }
  return m;
}

// pattern vertex i -> host vertex map[i], edges preserved both ways.
inline bool preserves(const Graph& host, const Graph& pattern, const std::vector<int>& map) {
  for (int a = 0; a < pattern.order(); ++a) {
    for (int b = a + 1; b < pattern.order(); ++b) {
      if (adjacent(pattern, a, b) != adjacent(host, map[a], map[b])) return false;
    }
  }
  return true;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || edge_count(g) != edge_count(h)) return false;
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (preserves(g, h, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Some |pattern|-subset of the host, in some order, induces the pattern.
inline bool has_induced_copy(const Graph& host, const Graph& pattern) {
  int n = host.order();
  int p = pattern.order();
  if (p > n) return false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) != p) continue;
    std::vector<int> pick;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1) pick.push_back(v);
    }
    do {
      if (preserves(host, pattern, pick)) return true;
    } while (std::next_permutation(pick.begin(), pick.end()));
  }
  return false;
}

// Smallest adjacency string over all relabelings.
inline std::vector<bool> canonical_string(const Graph& g) {
  int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> s;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) s.push_back(adjacent(g, perm[a], perm[b]));
    }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Isomorphism classes on n vertices: extend every class on n - 1 by one
// vertex with every possible neighborhood, dedup by canonical_string.
inline std::size_t count_graph_classes(int n) {
  std::vector<Graph> level = {Graph(0)};
  for (int size = 1; size <= n; ++size) {
    std::set<std::vector<bool>> seen;
    std::vector<Graph> next;
    for (const Graph& g : level) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (size - 1)); ++nb) {
        Graph h(size);
        for (int a = 0; a < size - 1; ++a) {
          for (int b = a + 1; b < size - 1; ++b) {
            if (adjacent(g, a, b)) h.add_edge(a, b);
          }
          if (nb >> a & 1) h.add_edge(a, size - 1);
        }
        if (seen.insert(canonical_string(h)).second) next.push_back(h);
      }
    }
    level = std::move(next);
  }
  return level.size();
}

// Positions covered by an arc, by walking clockwise from start.
inline std::vector<bool> arc_points(const hca::ArcModel& m, int i) {
  std::vector<bool> pts(m.circle_size, false);
  const hca::Arc& a = m.arcs[i];
  if (a.full) {
    pts.assign(m.circle_size, true);
    return pts;
  }
  for (int p = a.start;; p = (p + 1) % m.circle_size) {
    pts[p] = true;
    if (p == a.end) break;
  }
  return pts;
}

inline Graph intersection_graph(const hca::ArcModel& m) {
  Graph g(m.size());
  for (int a = 0; a < m.size(); ++a) {
    auto pa = arc_points(m, a);
    for (int b = a + 1; b < m.size(); ++b) {
      auto pb = arc_points(m, b);
      for (int p = 0; p < m.circle_size; ++p) {
        if (pa[p] && pb[p]) {
          g.add_edge(a, b);
          break;
        }
      }
    }
  }
  return g;
}

// Helly by definition: every pairwise-intersecting subfamily has a
// common point.
inline bool is_helly(const hca::ArcModel& m) {
  int n = m.size();
  std::vector<std::vector<bool>> pts;
  for (int i = 0; i < n; ++i) pts.push_back(arc_points(m, i));
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    bool pairwise = true;
    for (int a = 0; a < n && pairwise; ++a) {
      for (int b = a + 1; b < n && pairwise; ++b) {
        if (!(mask >> a & 1) || !(mask >> b & 1)) continue;
        bool meet = false;
        for (int p = 0; p < m.circle_size; ++p) meet = meet || (pts[a][p] && pts[b][p]);
        pairwise = meet;
      }
    }
    if (!pairwise) continue;
    bool common = false;
    for (int p = 0; p < m.circle_size && !common; ++p) {
      bool all = true;
      for (int a = 0; a < n; ++a) {
        if ((mask >> a & 1) && !pts[a][p]) all = false;
      }
      common = all;
    }
    if (!common) return false;
  }
  return true;
}

// The 1-rows of every column form one circular run under `order`.
inline bool circular_runs(const std::vector<std::vector<bool>>& rows, const std::vector<int>& order) {
  int r = static_cast<int>(order.size());
  if (r == 0) return true;
  int cols = static_cast<int>(rows[0].size());
  for (int c = 0; c < cols; ++c) {
    int ones = 0;
    int starts = 0;
    for (int i = 0; i < r; ++i) {
      bool here = rows[order[i]][c];
      bool before = rows[order[(i + r - 1) % r]][c];
      ones += here ? 1 : 0;
      starts += (here && !before) ? 1 : 0;
    }
    if (ones != 0 && ones != r && starts != 1) return false;
  }
  return true;
}

inline bool has_circular_ones(const std::vector<std::vector<bool>>& rows) {
  std::vector<int> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  if (order.size() <= 2) return circular_runs(rows, order);
  // Row 0 stays first: rotations change nothing.
  do {
    if (circular_runs(rows, order)) return true;
  } while (std::next_permutation(order.begin() + 1, order.end()));
  return false;
}

inline std::vector<std::vector<bool>> rows_of(const hca::BinaryMatrix& m) {
  std::vector<std::vector<bool>> rows(m.rows(), std::vector<bool>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) rows[r][c] = m.at(r, c);
  }
  return rows;
}

// HCA iff some circular order of the maximal cliques puts every vertex's
// cliques in one run.
inline bool is_hca(const Graph& g) {
  auto cliques = oracle::maximal_cliques(g);
  std::vector<std::vector<bool>> rows;
  for (std::uint64_t c : cliques) {
    std::vector<bool> row(g.order());
    for (int v = 0; v < g.order(); ++v) row[v] = c >> v & 1;
    rows.push_back(row);
  }
  return has_circular_ones(rows);
}

// Concave-round iff some circular vertex order makes every closed
// neighborhood a circular run.
inline bool is_concave_round(const Graph& g) {
  int n = g.order();
  std::vector<std::vector<bool>> rows(n, std::vector<bool>(n));
  for (int v = 0; v < n; ++v) {
    for (int u = 0; u < n; ++u) rows[v][u] = u == v || adjacent(g, u, v);
  }
  return has_circular_ones(rows);
}

}  // namespace oracle
