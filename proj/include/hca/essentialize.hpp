#pragma once

#include <string>
#include <variant>

#include "hca/graph.hpp"
#include "hca/isomorphism.hpp"
#include "hca/obstacle.hpp"

namespace hca {

struct EssentialResult {
  ObstacleEnumeration enumeration;  // in ids of the input graph
  VertexSet vertices;               // the induced subgraph it enumerates
};

/// One of C4*, K23, domino, G3, co-C6, co-(C5+K2), induced in the input.
struct SmallForbidden {
  std::string name;
  VertexSet vertices;
  IsoMapping copy;  // catalog graph -> input graph
};

using EssentializeOutcome = std::variant<EssentialResult, SmallForbidden>;

/// Catalog graph behind a SmallForbidden name; throws InputError otherwise.
Graph small_forbidden_graph(const std::string& name);

/// Re-checks an outcome against g: the enumeration is valid and essential
/// on exactly `vertices`, or the copy is an induced copy of the named graph
/// with image `vertices`.
bool verify_outcome(const Graph& g, const EssentializeOutcome& outcome);

/// Case analysis for a cover edge y1y2 (k = 3 symmetric, k = 3 with one
/// singleton non-neighborhood, k = 4). Returns a verified outcome on at most
/// ten vertices; throws InputError if y1y2 is not a cover and InternalError
/// if the produced outcome fails its own check.
EssentializeOutcome resolve_cover(const Graph& g, const ObstacleEnumeration& e, int y1, int y2);

struct EssentializeStats {
  int classified_edges = 0;  // classify_edge calls
  int inner_shrinks = 0;
  int outer_shrinks = 0;
  /// Valid edges by support: a shared core non-neighbor, or the core edge
  /// whose slot holds both endpoints.
  int vertex_supports = 0;
  int edge_supports = 0;
  /// Distinct core edges seen across all intermediate enumerations.
  int surrounding_edges = 0;
  /// |core| + |witnesses| after each step, starting with the input.
  std::vector<int> sizes;
};

struct EssentializeOptions {
  /// Re-classify every edge already found valid after each shrink and fail
  /// if any of them changed class.
  bool check_stability = false;
};

/// Shrinks along shortcuts until every witness-witness edge is valid, or
/// resolves the first cover met. Edges are visited in sorted order; an
/// edge found valid is never visited again while both ends stay witnesses.
EssentializeOutcome essentialize(const Graph& g, const ObstacleEnumeration& e,
                                 EssentializeStats* stats = nullptr,
                                 const EssentializeOptions& options = {});

}  // namespace hca
