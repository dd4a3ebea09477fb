#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hca/graph.hpp"
#include "hca/isomorphism.hpp"
#include "hca/obstacle.hpp"

namespace hca {

enum class SlotType { Single, Pair };

/// Relation between the last witness of slot i-1 and the first of slot i.
enum class Boundary { Merge, NonAdjacent, Adjacent };

struct ObstacleSpec {
  std::vector<SlotType> slots;
  std::vector<Boundary> boundaries;  // boundaries[i] sits before slots[i]

  int k() const { return static_cast<int>(slots.size()); }
  bool operator==(const ObstacleSpec&) const = default;
};

/// Merge needs Pair on both sides; Single-Single admits only NonAdjacent.
bool is_legal(const ObstacleSpec& spec);

struct GeneratedObstacle {
  Graph graph;
  ObstacleEnumeration enumeration;
};

/// Core ids 0..k-1, then witnesses in slot order (a merged vertex keeps the
/// id it got as z of the earlier slot, or as u of slot 0 when the wrap
/// boundary merges). Witness-witness edges: pair edges plus Adjacent
/// boundaries. Throws InputError on an illegal spec.
GeneratedObstacle gen_obstacle(const ObstacleSpec& spec);

std::vector<int> bracelet_canonical(std::vector<int> s);

/// Ternary bracelets of length k, by the totient sum over divisors.
std::uint64_t bracelet_count(int k);

/// Distinct bracelet_canonical images of all 3^k sequences.
std::uint64_t bracelet_count_brute_force(int k);

struct EssentialClass {
  GeneratedObstacle obstacle;
  ObstacleSpec spec;  // first legal spec (in enumeration order) of the class
  CanonicalForm form;
};

struct EnumerateOptions {
  bool claw_free_only = false;
  bool all_pair_only = false;
};

inline constexpr int kMinEnumerateK = 3;
inline constexpr int kMaxEnumerateK = 6;

/// Every legal spec with core length k, one entry per isomorphism class,
/// sorted by (vertices, edges, canonical form). Specs are processed in
/// parallel; the result does not depend on scheduling. Throws
/// BoundExceeded for k outside 3..6.
std::vector<EssentialClass> enumerate_essential(int k, const EnumerateOptions& options = {});

/// Single-threaded reference of enumerate_essential.
std::vector<EssentialClass> enumerate_essential_serial(int k, const EnumerateOptions& options = {});

struct NamedObstacle {
  std::string name;
  EssentialClass cls;
};

/// The claw-free, 5-wheel-free essential obstacles over k = 3..5, named.
/// co-3K2, co-P7, net and co-2P4 bind by isomorphism; co-F8 is the class
/// first reached at k = 5; co-H3 is the one remaining class that is not
/// concave-round; co-F1, co-F2 follow (vertices, edges, canonical form).
std::vector<NamedObstacle> obst8_catalog();

/// obst8_catalog() computed once per process.
const std::vector<NamedObstacle>& obst8_cached();

/// `<family>_<k>_<hash>`, family "allpair" or "mixed".
std::string catalog_entry_name(const EssentialClass& cls);

}  // namespace hca
