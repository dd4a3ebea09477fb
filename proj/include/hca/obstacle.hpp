#pragma once

#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hca/graph.hpp"
#include "hca/isomorphism.hpp"

namespace hca {

/// Witness enumeration of one core edge v_i v_{i+1}: either a single
/// vertex missing both ends, or an adjacent pair (u, z) where u misses only
/// v_i and z misses only v_{i+1}.
struct WitnessSlot {
  bool pair = false;
  int u = -1;  // the witness w for a Single
  int z = -1;

  static WitnessSlot single(int w) { return {false, w, -1}; }
  static WitnessSlot make_pair(int u, int z) { return {true, u, z}; }

  int first() const { return u; }
  int last() const { return pair ? z : u; }
  bool operator==(const WitnessSlot&) const = default;
};

/// Circular core v_1..v_k (stored 0-based) plus one witness slot per core
/// edge; slots[i] belongs to the edge core[i] core[(i+1) % k].
struct ObstacleEnumeration {
  std::vector<int> core;
  std::vector<WitnessSlot> slots;

  int k() const { return static_cast<int>(core.size()); }
  VertexSet core_set() const { return VertexSet::from(core); }
  VertexSet witnesses() const;
  VertexSet vertices() const { return core_set() | witnesses(); }
  /// Position of v in the core, or -1.
  int index_of(int v) const;
  /// True iff y1 and y2 form the pair of some slot.
  bool together(int y1, int y2) const;

  /// Same enumeration read starting at core[shift].
  ObstacleEnumeration rotated(int shift) const;
  /// Core read backwards from core[0]: v_1, v_k, ..., v_2; pairs swap.
  ObstacleEnumeration reflected() const;
  /// Vertex ids replaced by map[id].
  ObstacleEnumeration relabeled(const std::vector<int>& map) const;
  /// Vertex ids v replaced by their index among `s` (as induced_subgraph
  /// numbers them). Every vertex must belong to s.
  ObstacleEnumeration restricted_to(VertexSet s) const;

  bool operator==(const ObstacleEnumeration&) const = default;
};

struct Validation {
  bool ok = true;
  std::string violation;
  explicit operator bool() const { return ok; }
};

/// Checks that the core is a clique of distinct vertices, k >= 3, every
/// Single misses exactly {v_i, v_{i+1}} of the core, every Pair misses
/// exactly {v_i} resp. {v_{i+1}} and is an edge, no witness is a core vertex.
Validation validate_enumeration(const Graph& g, const ObstacleEnumeration& e);

/// Non-neighbors of y inside the core.
VertexSet core_non_neighbors(const Graph& g, const ObstacleEnumeration& e, int y);

/// (l(y), r(y)): equal when y misses one core vertex, otherwise r(y)
/// follows l(y) in the core. Throws InputError if y is not a witness or its
/// core non-neighborhood has the wrong shape.
std::pair<int, int> witness_bounds(const Graph& g, const ObstacleEnumeration& e, int y);

/// Whether core vertices a and b sit next to each other in the circle.
bool consecutive(const ObstacleEnumeration& e, int a, int b);

struct EdgeClass {
  enum Kind { InnerShortcut, OuterShortcut, Cover, Valid };
  Kind kind = Valid;
  /// For InnerShortcut: the inner-shortcut pair (first, second).
  int first = -1;
  int second = -1;
};

const char* to_string(EdgeClass::Kind k);

/// The four raw definitions, evaluated independently.
struct EdgePredicates {
  bool inner_12 = false;  // (y1, y2) is an inner-shortcut pair
  bool inner_21 = false;  // (y2, y1) is an inner-shortcut pair
  bool outer = false;
  bool cover = false;
  bool valid = false;
};

EdgePredicates edge_predicates(const Graph& g, const ObstacleEnumeration& e, int y1, int y2);

/// Exactly one class per witness-witness edge; throws InternalError if the
/// definitions ever disagree with that, InputError on bad input.
EdgeClass classify_edge(const Graph& g, const ObstacleEnumeration& e, int y1, int y2);

/// Edges of g joining two witnesses of e, sorted.
std::vector<std::pair<int, int>> witness_edges(const Graph& g, const ObstacleEnumeration& e);

/// Every witness-witness edge is Valid. Throws InputError if e is invalid.
bool is_essential(const Graph& g, const ObstacleEnumeration& e);

struct PseudoDominoLabels {
  int a1, a2, b1, b2, c1, c2;
};

struct PseudoDominoResult {
  enum Kind { K23Copy, Domino, G3, CoC6, HandlesPlusDiagonal };
  Kind kind = HandlesPlusDiagonal;
  /// Host vertices of the induced copy (absent for HandlesPlusDiagonal).
  IsoMapping copy;
};

/// Resolves a pseudo-domino: an induced K23, or domino / G3 / co-C6 when no
/// diagonal is an edge, or both handles plus a diagonal. Throws InputError
/// if the labels do not form a pseudo-domino.
PseudoDominoResult classify_pseudo_domino(const Graph& g, const PseudoDominoLabels& labels);

/// Text format: `obstacle <k>`, `core v_1 .. v_k`, then per slot
/// `wit <i> single <w>` or `wit <i> pair <u> <z>` with i in 1..k.
ObstacleEnumeration parse_obstacle(std::istream& in);
ObstacleEnumeration parse_obstacle_string(const std::string& text);
ObstacleEnumeration read_obstacle_file(const std::string& path);
std::string format_obstacle(const ObstacleEnumeration& e);

}  // namespace hca
