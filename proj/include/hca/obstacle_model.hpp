#pragma once

#include "hca/arc_model.hpp"
#include "hca/graph.hpp"
#include "hca/obstacle.hpp"

namespace hca {

/// Circular-arc model of an essential obstacle G (V(G) = core + witnesses)
/// that is not Helly, with the core as the only clique lacking a clique
/// point. Positions: 9 per core slot, holding the named points l_i,
/// r_{i-1}, m_i in that clockwise order with one sub-slot either side, so
/// open ends move one sub-slot inward. co-3K2 (a clique made of witnesses
/// only) gets a fixed 6-position model. Throws InputError if e is not an
/// essential enumeration covering G, InternalError if the result does not
/// reproduce G exactly.
ArcModel build_essential_model(const Graph& g, const ObstacleEnumeration& e);

/// Helly model of G - v with ids renumbered as induced_subgraph does. Core
/// deletions drop the arc; witness deletions also reshape the core arcs
/// next to the witness. Throws InternalError if the result is not a Helly
/// model of G - v.
ArcModel build_deleted_model(const Graph& g, const ObstacleEnumeration& e, int v);

}  // namespace hca
