#pragma once
// Seeded random inputs shared by the unit tests and the acceptance run.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "hca/arc_model.hpp"
#include "hca/catalog.hpp"
#include "hca/circular_ones.hpp"
#include "hca/concave_round.hpp"
#include "hca/generator.hpp"
#include "hca/graph.hpp"
#include "hca/isomorphism.hpp"
#include "hca/obstacle.hpp"

namespace fixtures {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<unsigned>(n)); }

inline std::vector<int> shuffled_ids(Rng& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline hca::Graph relabel(const hca::Graph& g, const std::vector<int>& perm) {
  hca::Graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

inline hca::Graph random_graph(Rng& rng, int n, int percent) {
  hca::Graph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (static_cast<int>(rng() % 100) < percent) g.add_edge(a, b);
    }
  }
  return g;
}

// n arcs on p positions, about one in fifteen full.
inline hca::ArcModel random_model(Rng& rng, int n, int p) {
  hca::ArcModel m{p, {}};
  for (int i = 0; i < n; ++i) {
    if (rng() % 15 == 0) {
      m.arcs.push_back({0, 0, true});
    } else {
      m.arcs.push_back({pick(rng, p), pick(rng, p), false});
    }
  }
  return m;
}

inline hca::BinaryMatrix random_matrix(Rng& rng, int rows, int cols, int percent) {
  hca::BinaryMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m.set(r, c, static_cast<int>(rng() % 100) < percent);
  }
  return m;
}

// Circular ones by construction, rows then shuffled.
inline hca::BinaryMatrix random_circular_matrix(Rng& rng, int rows, int cols) {
  hca::BinaryMatrix m(rows, cols);
  auto perm = shuffled_ids(rng, rows);
  for (int c = 0; c < cols; ++c) {
    int start = pick(rng, rows);
    int len = pick(rng, rows + 1);
    for (int i = 0; i < len; ++i) m.set(perm[(start + i) % rows], c, true);
  }
  return m;
}

struct Multiple {
  hca::Graph graph;
  bool with_w = false;
  std::vector<int> base_of;  // vertex -> base vertex it copies
};

// Blow every vertex of co-C7* (or co-Z) up into a clique of 1..4 true
// twins, at most 30 vertices in total, then shuffle ids.
inline Multiple random_multiple(Rng& rng) {
  Multiple out;
  out.with_w = rng() % 2 == 1;
  hca::Graph base = hca::co_c7_base(out.with_w);
  int b = base.order();
  std::vector<int> sizes(b);
  int total = 0;
  do {
    total = 0;
    for (int& s : sizes) {
      s = 1 + pick(rng, 4);
      total += s;
    }
  } while (total > 30);
  std::vector<int> cls;
  for (int i = 0; i < b; ++i) cls.insert(cls.end(), sizes[i], i);
  auto perm = shuffled_ids(rng, total);
  out.graph = hca::Graph(total);
  out.base_of.assign(total, -1);
  for (int a = 0; a < total; ++a) {
    out.base_of[perm[a]] = cls[a];
    for (int c = a + 1; c < total; ++c) {
      if (cls[a] == cls[c] || base.adjacent(cls[a], cls[c])) out.graph.add_edge(perm[a], perm[c]);
    }
  }
  return out;
}

inline bool is_multiple(const hca::Graph& g) {
  hca::Graph rep = hca::contract_true_twins(g).graph;
  return hca::isomorphic(rep, hca::co_c7_base(false)).has_value() ||
         hca::isomorphic(rep, hca::co_c7_base(true)).has_value();
}

// A random multiple with one edge flipped, kept only when the result is no
// longer a multiple yet still contains co-C7*.
inline std::optional<hca::Graph> random_flip(Rng& rng) {
  hca::Graph g = random_multiple(rng).graph;
  int a = pick(rng, g.order());
  int c = pick(rng, g.order());
  if (a == c) return std::nullopt;
  if (g.adjacent(a, c)) {
    g.remove_edge(a, c);
  } else {
    g.add_edge(a, c);
  }
  if (is_multiple(g)) return std::nullopt;
  if (!hca::find_induced_copy(g, hca::co_c7_base(false))) return std::nullopt;
  return g;
}

inline hca::ObstacleSpec random_spec(Rng& rng, int k) {
  hca::ObstacleSpec spec;
  spec.slots.resize(k);
  spec.boundaries.resize(k);
  do {
    for (int i = 0; i < k; ++i) {
      spec.slots[i] = rng() % 2 ? hca::SlotType::Pair : hca::SlotType::Single;
      spec.boundaries[i] = static_cast<hca::Boundary>(pick(rng, 3));
    }
  } while (!hca::is_legal(spec));
  return spec;
}

enum class Mutation { WitnessEdges, ShortcutWitness, Cover, Noise };

struct Mutated {
  hca::Graph graph;
  hca::ObstacleEnumeration enumeration;
  Mutation kind = Mutation::WitnessEdges;
};

// A generated obstacle with one of: random witness-witness edges; a new
// Single witness whose non-neighbor pair sits far from its neighbors in the
// enumeration (edges to it are shortcuts); a cover built on k = 3;
// or noise vertices with random edges. Ids are shuffled and the
// enumeration is rotated or reflected at random.
inline Mutated random_mutation(Rng& rng) {
  Mutated out;
  out.kind = static_cast<Mutation>(pick(rng, 4));
  int k = out.kind == Mutation::Cover ? 3 : 3 + pick(rng, 4);
  hca::ObstacleSpec spec = random_spec(rng, k);
  if (out.kind == Mutation::Cover) {
    spec.slots.assign(3, hca::SlotType::Single);
    spec.boundaries.assign(3, hca::Boundary::NonAdjacent);
  }
  hca::GeneratedObstacle ob = hca::gen_obstacle(spec);
  hca::Graph g = ob.graph;
  hca::ObstacleEnumeration e = ob.enumeration;
  auto wit = e.witnesses().members();
  switch (out.kind) {
    case Mutation::WitnessEdges: {
      int adds = 1 + pick(rng, 10);
      for (int a = 0; a < adds; ++a) {
        int x = wit[pick(rng, static_cast<int>(wit.size()))];
        int y = wit[pick(rng, static_cast<int>(wit.size()))];
        if (x != y) g.add_edge(x, y);
      }
      break;
    }
    case Mutation::ShortcutWitness: {
      // Slot i gets a fresh Single witness seeing most other witnesses,
      // which makes inner or outer shortcuts. The old witnesses stay as
      // unenumerated vertices.
      int i = pick(rng, k);
      hca::Graph h(g.order() + 1);
      for (auto [u, v] : g.edges()) h.add_edge(u, v);
      int y = g.order();
      for (int c = 0; c < k; ++c) {
        if (c != i && c != (i + 1) % k) h.add_edge(y, e.core[c]);
      }
      for (int w : wit) {
        if (rng() % 3 != 0) h.add_edge(y, w);
      }
      e.slots[i] = hca::WitnessSlot::single(y);
      g = h;
      if (!hca::validate_enumeration(g, e)) {
        g = ob.graph;
        e = ob.enumeration;
      }
      break;
    }
    case Mutation::Cover: {
      // w_2 misses {v_2, v_3}, w_3 misses {v_3, v_1}: joining them is a cover.
      g.add_edge(e.slots[1].u, e.slots[2].u);
      if (rng() % 2) g.add_edge(e.slots[0].u, e.slots[1].u);
      break;
    }
    case Mutation::Noise:
      break;
  }
  int noise = out.kind == Mutation::Noise ? 1 + pick(rng, 3) : pick(rng, 2);
  hca::Graph h(g.order() + noise);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  for (int x = g.order(); x < h.order(); ++x) {
    for (int y = 0; y < x; ++y) {
      if (rng() % 2) h.add_edge(x, y);
    }
  }
  auto perm = shuffled_ids(rng, h.order());
  out.graph = relabel(h, perm);
  out.enumeration = e.relabeled(perm);
  if (rng() % 2) out.enumeration = out.enumeration.rotated(pick(rng, k));
  if (rng() % 2) out.enumeration = out.enumeration.reflected();
  return out;
}

}  // namespace fixtures
