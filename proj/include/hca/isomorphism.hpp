#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hca/graph.hpp"

namespace hca {

/// Injective map from the vertices of a pattern H into a host G;
/// map[h] is the host vertex playing the role of h.
struct IsoMapping {
  std::vector<int> map;

  VertexSet image() const { return VertexSet::from(map); }
  bool operator==(const IsoMapping&) const = default;
};

/// True iff `m` is injective, in range, and preserves adjacency and
/// non-adjacency exactly. Independent of how the mapping was found.
bool is_induced_copy(const Graph& host, const Graph& pattern, const IsoMapping& m);

/// Exhaustive backtracking search for an induced copy of `pattern` in
/// `host`. Returns the first mapping in a fixed search order, or nullopt
/// when no induced copy exists.
std::optional<IsoMapping> find_induced_copy(const Graph& host, const Graph& pattern);

/// Same as find_induced_copy but only mappings whose image lies in `within`.
std::optional<IsoMapping> find_induced_copy_within(const Graph& host, VertexSet within,
                                                   const Graph& pattern);

/// An isomorphism from `pattern` onto host[s], expressed in host ids.
std::optional<IsoMapping> induced_copy_on(const Graph& host, VertexSet s, const Graph& pattern);

/// An isomorphism from h onto g (map[v of h] = vertex of g), if one exists.
std::optional<IsoMapping> isomorphic(const Graph& g, const Graph& h);

/// Adjacency rows of the graph relabeled into canonical order. Two graphs
/// are isomorphic iff their canonical forms compare equal.
struct CanonicalForm {
  int n = 0;
  std::vector<Bits> rows;

  auto operator<=>(const CanonicalForm&) const = default;
  std::uint64_t hash() const;
  /// 16 lowercase hex digits of hash().
  std::string hex() const;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// order[i] is the original vertex that receives canonical label i.
  std::vector<int> order;
};

/// Canonical labeling via equitable partition refinement and
/// individualization, pruned by twin and automorphism orbits. Ties in the
/// search are broken by smallest resulting adjacency code.
CanonicalLabeling canonical_labeling(const Graph& g);

inline CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

Graph graph_from_canonical(const CanonicalForm& f);

}  // namespace hca
