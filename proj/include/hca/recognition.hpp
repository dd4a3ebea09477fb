#pragma once

#include <optional>
#include <vector>

#include "hca/arc_model.hpp"
#include "hca/circular_ones.hpp"
#include "hca/graph.hpp"
#include "hca/obstacle.hpp"

namespace hca {

inline constexpr std::size_t kMaxCliqueRows = 4096;

struct CliqueMatrix {
  BinaryMatrix matrix;             // rows: cliques, columns: vertices
  std::vector<VertexSet> cliques;  // row order, as maximal_cliques lists them
};

/// Throws BoundExceeded beyond kMaxCliqueRows maximal cliques.
CliqueMatrix clique_matrix(const Graph& g);

/// Helly model on one position per maximal clique, placed in a circular-ones
/// order of the clique matrix; vertex v covers the run of cliques holding
/// it (a full arc when v lies in every clique). nullopt iff G is not HCA.
std::optional<ArcModel> recognize_hca(const Graph& g);

inline bool is_hca(const Graph& g) { return recognize_hca(g).has_value(); }

/// Deletes vertices in ascending id order, restarting after every
/// successful deletion, while the rest stays non-HCA. Throws InputError if
/// G is HCA.
VertexSet minimal_non_hca(const Graph& g);

inline constexpr int kMaxObstacleSearch = 12;

/// Exhaustive search for an obstacle enumeration covering all of V(G):
/// cores by increasing k, then lexicographic order of the core sequence
/// (v_1 smallest); per slot, singles before pairs, ascending ids. The
/// first hit is returned. Core candidates are searched in parallel; the
/// lowest-indexed hit wins, so the answer equals the serial one. Throws
/// BoundExceeded above 12 vertices.
std::optional<ObstacleEnumeration> find_obstacle_enumeration(const Graph& g);

/// Single-threaded reference of the same search.
std::optional<ObstacleEnumeration> find_obstacle_enumeration_serial(const Graph& g);

}  // namespace hca
