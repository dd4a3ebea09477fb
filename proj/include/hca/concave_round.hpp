#pragma once

#include <optional>
#include <vector>

#include "hca/circular_ones.hpp"
#include "hca/graph.hpp"

namespace hca {

/// Circular order of all vertices in which every closed neighborhood is a
/// circular interval.
struct CircularOrder {
  std::vector<int> order;
};

/// Rows: vertices (to be ordered); column v: N[v].
BinaryMatrix closed_neighborhood_matrix(const Graph& g);

bool is_concave_order(const Graph& g, const CircularOrder& c);

std::optional<CircularOrder> recognize_concave_round(const Graph& g);

inline bool is_concave_round(const Graph& g) { return recognize_concave_round(g).has_value(); }

/// Ascending-id deletion with restart, as for minimal_non_hca. Throws
/// InputError if G is concave-round.
VertexSet minimal_non_concave(const Graph& g);

struct TwinContraction {
  Graph graph;                   // one vertex per class, ordered by smallest member
  std::vector<int> class_of;     // input vertex -> representative vertex
  std::vector<VertexSet> classes;
};

/// Merges vertices with equal closed neighborhoods.
TwinContraction contract_true_twins(const Graph& g);

}  // namespace hca
