#pragma once

#include <array>
#include <optional>
#include <variant>

#include "hca/forbidden.hpp"
#include "hca/graph.hpp"
#include "hca/isomorphism.hpp"
#include "hca/obstacle.hpp"

namespace hca {

/// (V_1..V_7, U, W) stored 0-based: v[0] is V_1. j is 0-based too and
/// present iff W is nonempty.
struct MultiplePartition {
  std::array<VertexSet, 7> v;
  VertexSet u;
  VertexSet w;
  std::optional<int> j;
};

/// Conditions (1)-(5) of the co-C7* multiples lemma, checked literally,
/// plus: the nine sets are disjoint and cover V(G).
Validation validate_partition(const Graph& g, const MultiplePartition& p);

using MultiplesOutcome = std::variant<MultiplePartition, ForbiddenCopy>;

struct MultiplesStats {
  int inserted = 0;   // vertices added beyond the base co-C7*
  int fallbacks = 0;  // forbidden copies found by search instead of a case's own vertex set
};

/// Grows the partition from the induced co-C7* given by `j` (a mapping of
/// catalog co-C7* into G), inserting the other vertices in ascending id
/// order. Each case of the lemma either places the new vertex or names an
/// induced claw, 5-wheel, C4*, co-3K2 or co-P7 on the vertices it lists.
/// When a listed set fails verification (and for the one configuration the
/// case analysis leaves open), the five graphs are searched for among the
/// base representatives and the vertices at hand. Throws InputError if `j`
/// is not an induced co-C7*.
MultiplesOutcome multiple_partition_coC7(const Graph& g, const IsoMapping& j,
                                         MultiplesStats* stats = nullptr);

}  // namespace hca
