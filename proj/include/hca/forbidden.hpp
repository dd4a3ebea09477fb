#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hca/graph.hpp"
#include "hca/isomorphism.hpp"

namespace hca {

/// An induced copy of a named graph inside some host.
struct ForbiddenCopy {
  std::string name;
  VertexSet vertices;
  IsoMapping copy;  // named graph -> host
};

/// Graph behind a certificate name: the fixed names of the catalog
/// (claw, 5-wheel, C4*, K23, domino, G3, co-C6, co-(C5+K2), co-3K2, co-P7,
/// net, co-2P4, co-F1, co-F2, co-H3, co-F8, tent*, co-C7*, co-Z) and the
/// families "C<k>*", "co-C<k>", "co-C<k>*". Throws InputError otherwise.
Graph forbidden_graph(const std::string& name);

bool verify_copy(const Graph& host, const ForbiddenCopy& f);

/// Induced copy of `name` on exactly the vertex set s, if G[s] is one.
std::optional<ForbiddenCopy> copy_on(const Graph& host, VertexSet s, const std::string& name);

/// First name (in the given order) with an induced copy inside `within`.
std::optional<ForbiddenCopy> find_first_copy(const Graph& host, VertexSet within,
                                             const std::vector<std::string>& names);

}  // namespace hca
