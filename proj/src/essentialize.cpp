#include "hca/essentialize.hpp"

#include <set>

#include "hca/catalog.hpp"
#include "hca/error.hpp"

namespace hca {

Graph small_forbidden_graph(const std::string& name) {
  if (name == names::kC4Star) return with_isolated_vertex(cycle_graph(4));
  if (name == names::kK23) return complete_bipartite(2, 3);
  if (name == names::kDomino) return pseudo_domino(0);
  if (name == names::kG3) return pseudo_domino(1);
  if (name == names::kCoC6) return pseudo_domino(2);
  if (name == names::kCoC5K2) return catalog_graph({"CoC5plusK2", {}});
  throw InputError("not a small forbidden graph: " + name);
}

bool verify_outcome(const Graph& g, const EssentializeOutcome& outcome) {
  if (const auto* ess = std::get_if<EssentialResult>(&outcome)) {
    if (!validate_enumeration(g, ess->enumeration)) return false;
    if (ess->enumeration.vertices() != ess->vertices) return false;
    return is_essential(g, ess->enumeration);
  }
  const auto& f = std::get<SmallForbidden>(outcome);
  Graph pattern = small_forbidden_graph(f.name);
  return is_induced_copy(g, pattern, f.copy) && f.copy.image() == f.vertices;
}

namespace {

// Names v_1..v_k and W_1..W_k of the enumeration as currently rotated.
struct View {
  const ObstacleEnumeration& e;
  int v(int i) const { return e.core[(i - 1) % e.k()]; }
  const WitnessSlot& w(int i) const { return e.slots[(i - 1) % e.k()]; }
};

class CoverResolver {
 public:
  explicit CoverResolver(const Graph& g) : g_(g) {}

  EssentializeOutcome run(const ObstacleEnumeration& e, int y1, int y2) {
    VertexSet n1 = core_non_neighbors(g_, e, y1);
    VertexSet n2 = core_non_neighbors(g_, e, y2);
    if (n1.size() != 2) {
      std::swap(y1, y2);
      std::swap(n1, n2);
    }
    int k = e.k();
    if (k == 3 && n2.size() == 2) {
      // Make r(y1) = l(y2) so that y2 misses {v_3, v_1} below.
      if (witness_bounds(g_, e, y1).second != witness_bounds(g_, e, y2).first) std::swap(y1, y2);
    }
    int l1 = witness_bounds(g_, e, y1).first;
    ObstacleEnumeration r = e.rotated((e.index_of(l1) + k - 1) % k);
    View q{r};
    VertexSet m2 = core_non_neighbors(g_, r, y2);
    if (k == 3 && m2 == VertexSet{q.v(3), q.v(1)}) return case1(r, y1, y2);
    if (k == 3 && m2 == VertexSet{q.v(1)}) return case2(r, y1, y2);
    if (k == 4 && m2 == VertexSet{q.v(4), q.v(1)}) return case3(r, y1, y2);
    throw InternalError("cover edge with unexpected core non-neighborhoods");
  }

 private:
  bool adj(int a, int b) const { return g_.adjacent(a, b); }

  EssentializeOutcome forbidden(const char* name, VertexSet s) const {
    auto copy = induced_copy_on(g_, s, small_forbidden_graph(name));
    if (!copy) throw InternalError(std::string("cover resolution expected an induced ") + name);
    return SmallForbidden{name, s, *copy};
  }

  EssentializeOutcome from_domino(const PseudoDominoResult& pd) const {
    static const char* const kNames[] = {names::kK23, names::kDomino, names::kG3, names::kCoC6};
    const char* name = kNames[pd.kind];
    return SmallForbidden{name, pd.copy.image(), pd.copy};
  }

  static EssentializeOutcome essential(std::vector<int> core, std::vector<WitnessSlot> slots) {
    ObstacleEnumeration e{std::move(core), std::move(slots)};
    VertexSet s = e.vertices();
    return EssentialResult{std::move(e), s};
  }

  static WitnessSlot pair(int u, int z) { return WitnessSlot::make_pair(u, z); }

  // k = 3, y1 = w_2 misses {v_2, v_3}, y2 = w_3 misses {v_3, v_1}.
  EssentializeOutcome case1(ObstacleEnumeration e, int w2, int w3) {
    View q{e};
    if (!q.w(1).pair) {
      int w1 = q.w(1).u;
      bool a = adj(w1, w2);
      bool b = adj(w1, w3);
      if (!a && !b) return forbidden(names::kC4Star, {q.v(1), w2, w3, q.v(2), w1});
      VertexSet six{q.v(1), q.v(2), q.v(3), w1, w2, w3};
      return forbidden(a && b ? names::kCoC6 : names::kG3, six);
    }
    auto pd = classify_pseudo_domino(
        g_, {q.w(1).u, q.w(1).z, q.v(2), q.v(1), w3, w2});
    if (pd.kind != PseudoDominoResult::HandlesPlusDiagonal) return from_domino(pd);
    if (!adj(q.w(1).u, w2)) {
      // Diagonal z_1 w_3 instead: read the core as v_2, v_1, v_3.
      e = e.rotated(1).reflected();
      std::swap(w2, w3);
    }
    View p{e};
    int u1 = p.w(1).u;
    int z1 = p.w(1).z;
    WitnessSlot last = adj(w3, z1) ? pair(p.v(2), w3) : WitnessSlot::single(w3);
    return essential({p.v(3), u1, z1}, {pair(w2, p.v(1)), pair(p.v(1), p.v(2)), last});
  }

  // k = 3, y1 = w_2 misses {v_2, v_3}, y2 misses only v_1.
  EssentializeOutcome case2(ObstacleEnumeration e, int w2, int y2) {
    if (!(e.slots[0].pair && e.slots[0].u == y2)) e = e.reflected();  // y2 was z_3
    View q{e};
    if (!(q.w(1).pair && q.w(1).u == y2)) throw InternalError("cover case 2: y2 is not u_1");
    int v1 = q.v(1);
    int v2 = q.v(2);
    int v3 = q.v(3);
    int u1 = y2;
    int z1 = q.w(1).z;
    if (!adj(w2, z1)) return forbidden(names::kK23, {u1, z1, v1, v2, w2});
    if (!q.w(3).pair) {
      int w3 = q.w(3).u;
      if (adj(w2, w3)) return case1(e, w2, w3);
      if (!adj(u1, w3)) return forbidden(names::kC4Star, {v1, v3, u1, w2, w3});
      WitnessSlot last = adj(w3, z1) ? pair(v2, w3) : WitnessSlot::single(w3);
      return essential({v3, u1, z1}, {pair(w2, v1), pair(v1, v2), last});
    }
    int u3 = q.w(3).u;
    if (!adj(u3, u1)) {
      WitnessSlot last = adj(u3, z1) ? pair(u3, v2) : WitnessSlot::single(u3);
      return essential({z1, v1, v3}, {pair(v2, u1), pair(u1, w2), last});
    }
    if (!adj(u3, w2)) return forbidden(names::kK23, {v1, v3, u1, w2, u3});
    if (!adj(u3, z1)) return forbidden(names::kCoC5K2, {w2, u3, v2, v3, z1, v1, u1});
    return essential({v1, v2, v3}, {pair(u1, z1), pair(z1, u3), pair(u3, u1)});
  }

  // k = 4, y1 = w_2 misses {v_2, v_3}, y2 = w_4 misses {v_4, v_1}.
  EssentializeOutcome case3(ObstacleEnumeration e, int w2, int w4) {
    View q{e};
    if (q.w(1).pair) {
      auto pd = classify_pseudo_domino(g_, {q.w(1).u, q.w(1).z, q.v(2), q.v(1), w4, w2});
      if (pd.kind != PseudoDominoResult::HandlesPlusDiagonal) return from_domino(pd);
      if (!adj(q.w(1).u, w2)) {
        e = e.rotated(1).reflected();  // v_2, v_1, v_4, v_3
        std::swap(w2, w4);
      }
      View p{e};
      int u1 = p.w(1).u;
      int z1 = p.w(1).z;
      if (!adj(w4, z1)) {
        return essential({u1, z1, p.v(3)},
                         {pair(p.v(1), p.v(2)), pair(w4, w2), pair(w2, p.v(1))});
      }
      // The enumerated edge u_1 v_3 (the first core edge of the new core).
      return essential({u1, p.v(3), p.v(4), z1}, {pair(p.v(1), w2), pair(w2, w4),
                                                   pair(w4, p.v(2)), pair(p.v(2), p.v(1))});
    }
    int w1 = q.w(1).u;
    bool a = adj(w1, w2);
    bool b = adj(w1, w4);
    if (!a && !b) return forbidden(names::kC4Star, {q.v(1), q.v(2), w2, w4, w1});
    if (a && !b) return forbidden(names::kK23, {q.v(1), q.v(3), w1, w2, w4});
    if (!a && b) return forbidden(names::kK23, {q.v(2), q.v(4), w1, w2, w4});
    return essential({w1, q.v(3), q.v(4)},
                     {pair(q.v(1), w2), pair(w2, w4), pair(w4, q.v(2))});
  }

  const Graph& g_;
};

ObstacleEnumeration shrink_inner(const Graph& g, const ObstacleEnumeration& e, int y1, int y2) {
  // Rotate so that r(y2) = v_1; then l(y1) = v_j with 3 <= j < k.
  int k = e.k();
  ObstacleEnumeration r = e.rotated(e.index_of(witness_bounds(g, e, y2).second));
  int j = r.index_of(witness_bounds(g, r, y1).first) + 1;
  if (j < 3 || j >= k) throw InternalError("inner shortcut with consecutive ends");
  ObstacleEnumeration out;
  out.core.assign(r.core.begin(), r.core.begin() + j);
  out.slots.assign(r.slots.begin(), r.slots.begin() + (j - 1));
  out.slots.push_back(WitnessSlot::make_pair(y1, y2));
  return out;
}

ObstacleEnumeration shrink_outer(const Graph& g, const ObstacleEnumeration& e, int y1, int y2) {
  int q1 = core_non_neighbors(g, e, y1).first();
  int q2 = core_non_neighbors(g, e, y2).first();
  int i1 = e.index_of(q1);
  int i2 = e.index_of(q2);
  ObstacleEnumeration out = e;
  if ((i1 + 1) % e.k() == i2) {
    out.slots[i1] = WitnessSlot::make_pair(y1, y2);
  } else {
    out.slots[i2] = WitnessSlot::make_pair(y2, y1);
  }
  return out;
}

std::pair<int, int> ordered(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace

EssentializeOutcome resolve_cover(const Graph& g, const ObstacleEnumeration& e, int y1, int y2) {
  if (auto v = validate_enumeration(g, e); !v) throw InputError("invalid enumeration: " + v.violation);
  if (classify_edge(g, e, y1, y2).kind != EdgeClass::Cover) {
    throw InputError("resolve_cover: edge is not a cover");
  }
  EssentializeOutcome out = CoverResolver(g).run(e, y1, y2);
  VertexSet s = std::visit([](const auto& o) { return o.vertices; }, out);
  if (s.size() > 10 || !verify_outcome(g, out)) {
    throw InternalError("cover resolution produced an outcome that fails verification");
  }
  return out;
}

EssentializeOutcome essentialize(const Graph& g, const ObstacleEnumeration& input,
                                 EssentializeStats* stats, const EssentializeOptions& options) {
  if (auto v = validate_enumeration(g, input); !v) {
    throw InputError("invalid enumeration: " + v.violation);
  }
  EssentializeStats local;
  EssentializeStats& st = stats ? *stats : local;
  st = {};
  ObstacleEnumeration e = input;
  std::set<std::pair<int, int>> known_valid;
  std::set<std::pair<int, int>> surrounding;
  auto record = [&] {
    for (int i = 0; i < e.k(); ++i) surrounding.insert(ordered(e.core[i], e.core[(i + 1) % e.k()]));
    st.surrounding_edges = static_cast<int>(surrounding.size());
    st.sizes.push_back(e.vertices().size());
  };
  record();

  for (;;) {
    bool shrunk = false;
    for (auto edge : witness_edges(g, e)) {
      if (known_valid.count(edge)) continue;
      ++st.classified_edges;
      EdgeClass c = classify_edge(g, e, edge.first, edge.second);
      if (c.kind == EdgeClass::Valid) {
        known_valid.insert(edge);
        ++(e.together(edge.first, edge.second) ? st.edge_supports : st.vertex_supports);
        continue;
      }
      if (c.kind == EdgeClass::Cover) return resolve_cover(g, e, edge.first, edge.second);
      int before = e.vertices().size();
      if (c.kind == EdgeClass::InnerShortcut) {
        e = shrink_inner(g, e, c.first, c.second);
        ++st.inner_shrinks;
      } else {
        e = shrink_outer(g, e, c.first, c.second);
        ++st.outer_shrinks;
      }
      if (auto v = validate_enumeration(g, e); !v) {
        throw InternalError("shrinking produced an invalid enumeration: " + v.violation);
      }
      if (e.vertices().size() >= before) throw InternalError("shrinking did not remove a vertex");
      known_valid.insert(edge);  // the shortcut pair now shares a slot
      shrunk = true;
      break;
    }
    if (!shrunk) break;
    VertexSet w = e.witnesses();
    std::erase_if(known_valid, [&](const auto& p) { return !w.contains(p.first) || !w.contains(p.second); });
    record();
    if (options.check_stability) {
      for (auto [a, b] : known_valid) {
        if (classify_edge(g, e, a, b).kind != EdgeClass::Valid) {
          throw InternalError("an edge found valid stopped being valid after shrinking");
        }
      }
    }
  }
  EssentializeOutcome out = EssentialResult{e, e.vertices()};
  if (!verify_outcome(g, out)) throw InternalError("essentialize result fails verification");
  return out;
}

}  // namespace hca
