#include "hca/concave_round.hpp"

#include "hca/error.hpp"

namespace hca {

BinaryMatrix closed_neighborhood_matrix(const Graph& g) {
  BinaryMatrix m(g.order(), g.order());
  for (int v = 0; v < g.order(); ++v) {
    for (int u : g.closed_neighbors(v)) m.set(u, v, true);
  }
  return m;
}

bool is_concave_order(const Graph& g, const CircularOrder& c) {
  if (static_cast<int>(c.order.size()) != g.order()) return false;
  if (VertexSet::from(c.order) != g.vertices()) return false;
  return is_circular_under(closed_neighborhood_matrix(g), c.order);
}

std::optional<CircularOrder> recognize_concave_round(const Graph& g) {
  if (g.order() == 0) return CircularOrder{};
  auto order = circular_ones_row_order(closed_neighborhood_matrix(g));
  if (!order) return std::nullopt;
  CircularOrder c{*order};
  if (!is_concave_order(g, c)) throw InternalError("circular-ones order is not concave");
  return c;
}

VertexSet minimal_non_concave(const Graph& g) {
  if (is_concave_round(g)) throw InputError("minimal_non_concave: graph is concave-round");
  VertexSet s = g.vertices();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v : s) {
      VertexSet t = s - VertexSet::single(v);
      if (!is_concave_round(induced_subgraph(g, t).graph)) {
        s = t;
        progress = true;
        break;
      }
    }
  }
  return s;
}

TwinContraction contract_true_twins(const Graph& g) {
  TwinContraction out;
  out.class_of.assign(g.order(), -1);
  std::vector<int> rep;
  for (int v = 0; v < g.order(); ++v) {
    if (out.class_of[v] >= 0) continue;
    int id = static_cast<int>(out.classes.size());
    VertexSet cls;
    for (int u = v; u < g.order(); ++u) {
      if (g.closed_neighbors(u) == g.closed_neighbors(v)) {
        cls.insert(u);
        out.class_of[u] = id;
      }
    }
    out.classes.push_back(cls);
    rep.push_back(v);
  }
  int r = static_cast<int>(rep.size());
  out.graph = Graph(r);
  for (int a = 0; a < r; ++a) {
    for (int b = a + 1; b < r; ++b) {
      if (g.adjacent(rep[a], rep[b])) out.graph.add_edge(a, b);
    }
  }
  return out;
}

}  // namespace hca
