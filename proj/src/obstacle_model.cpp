#include "hca/obstacle_model.hpp"

#include <functional>

#include "hca/error.hpp"

namespace hca {

namespace {

// Named points on the 9k-position circle; sub is -1, 0 or +1.
struct Points {
  int k;
  int at(int block, int offset, int sub) const { return 9 * (((block % k) + k) % k) + offset + sub; }
  int l(int i, int sub = 0) const { return at(i, 1, sub); }
  int r(int i, int sub = 0) const { return at(i + 1, 4, sub); }  // r_i lies in block i+1
  int m(int i, int sub = 0) const { return at(i, 7, sub); }
};

void check_covering_essential(const Graph& g, const ObstacleEnumeration& e) {
  if (auto v = validate_enumeration(g, e); !v) throw InputError("invalid enumeration: " + v.violation);
  if (e.vertices() != g.vertices()) throw InputError("enumeration does not cover the graph");
  if (!is_essential(g, e)) throw InputError("enumeration is not essential");
}

bool witness_only_clique(const Graph& g, const ObstacleEnumeration& e) {
  VertexSet q = e.core_set();
  for (VertexSet c : maximal_cliques(g)) {
    if (!c.intersects(q)) return true;
  }
  return false;
}

ArcModel co3k2_model(const ObstacleEnumeration& e) {
  // core c_0..c_2 and merged witnesses a_0..a_2, a_i missing c_i.
  ArcModel m;
  m.circle_size = 6;
  m.arcs.resize(6);
  const Arc core_arcs[] = {{0, 2}, {2, 4}, {4, 0}};
  const Arc wit_arcs[] = {{3, 5}, {5, 1}, {1, 3}};
  for (int i = 0; i < 3; ++i) {
    m.arcs[e.core[i]] = core_arcs[i];
    m.arcs[e.slots[i].u] = wit_arcs[i];
  }
  return m;
}

ArcModel general_model(const Graph& g, const ObstacleEnumeration& e) {
  int k = e.k();
  Points p{k};
  ArcModel m;
  m.circle_size = 9 * k;
  m.arcs.resize(g.order());
  std::vector<bool> set(g.order(), false);
  auto assign = [&](int v, Arc a) {
    if (set[v] && !(m.arcs[v] == a)) throw InternalError("merged witness received two arcs");
    m.arcs[v] = a;
    set[v] = true;
  };
  for (int i = 0; i < k; ++i) assign(e.core[i], {p.r(i, +1), p.l(i, -1)});
  for (int i = 0; i < k; ++i) {
    const WitnessSlot& s = e.slots[i];
    if (!s.pair) {
      assign(s.u, {p.l(i + 1), p.r(i)});
      continue;
    }
    const WitnessSlot& prev = e.slots[(i + k - 1) % k];
    const WitnessSlot& next = e.slots[(i + 1) % k];
    int u_start;
    if (!prev.pair && g.adjacent(prev.u, s.u)) {
      u_start = p.r(i - 1);
    } else if (prev.pair && prev.z == s.u) {
      u_start = p.l(i);
    } else if (prev.pair && g.adjacent(prev.z, s.u)) {
      u_start = p.m(i);
    } else {
      u_start = p.m(i, +1);
    }
    assign(s.u, {u_start, p.r(i)});
    int z_end;
    if (!next.pair && g.adjacent(next.u, s.z)) {
      z_end = p.l(i + 2);
    } else if (next.pair && next.u == s.z) {
      z_end = p.r(i + 1);
    } else if (next.pair && g.adjacent(next.u, s.z)) {
      z_end = p.m(i + 1);
    } else {
      z_end = p.m(i + 1, -1);
    }
    assign(s.z, {p.l(i + 1), z_end});
  }
  return m;
}

}  // namespace

ArcModel build_essential_model(const Graph& g, const ObstacleEnumeration& e) {
  check_covering_essential(g, e);
  bool co3k2 = witness_only_clique(g, e);
  ArcModel m = co3k2 ? co3k2_model(e) : general_model(g, e);
  if (!(intersection_graph(m) == g)) throw InternalError("essential model does not reproduce the graph");
  HellyReport h = helly_report(m);
  VertexSet q = e.core_set();
  // co-3K2 has no model where the core is the only pointless clique; there
  // the witness triangle lacks one too.
  if (co3k2) {
    for (std::size_t c = 0; c < h.cliques.size(); ++c) {
      if (h.cliques[c] == q && !h.clique_points[c]) return m;
    }
    throw InternalError("co-3K2 model: the core has a clique point");
  }
  for (std::size_t c = 0; c < h.cliques.size(); ++c) {
    if (h.clique_points[c].has_value() == (h.cliques[c] == q)) {
      throw InternalError("essential model: the core must be the only clique without a point");
    }
  }
  return m;
}

namespace {

// G - x for co-3K2: the partner of x becomes universal over a C4.
ArcModel co3k2_deleted(const Graph& g, int x) {
  int partner = g.non_neighbors(x).first();
  VertexSet rest = g.vertices() - VertexSet{x, partner};
  int a = rest.first();
  int a2 = (g.non_neighbors(a) & rest).first();
  VertexSet bs = rest - VertexSet{a, a2};
  int b = bs.first();
  int b2 = (bs - VertexSet::single(b)).first();
  ArcModel full;
  full.circle_size = 4;
  full.arcs.resize(g.order());
  full.arcs[a] = {0, 1};
  full.arcs[b] = {1, 2};
  full.arcs[a2] = {2, 3};
  full.arcs[b2] = {3, 0};
  full.arcs[partner] = {0, 3};
  return submodel(full, g.vertices() - VertexSet::single(x));
}

bool is_helly_model_of(const ArcModel& m, const Graph& h) {
  return intersection_graph(m) == h && helly_report(m).is_helly;
}

}  // namespace

ArcModel build_deleted_model(const Graph& g, const ObstacleEnumeration& e, int v) {
  if (v < 0 || v >= g.order()) throw InputError("vertex out of range");
  check_covering_essential(g, e);
  Graph target = delete_vertex(g, v).graph;
  VertexSet rest = g.vertices() - VertexSet::single(v);
  if (witness_only_clique(g, e)) {
    ArcModel m = co3k2_deleted(g, v);
    if (!is_helly_model_of(m, target)) throw InternalError("co-3K2 deletion model is wrong");
    return m;
  }

  int k = e.k();
  Points p{k};
  ArcModel base = general_model(g, e);
  std::vector<std::function<void(ArcModel&)>> candidates;
  int j = e.index_of(v);
  if (j >= 0) candidates.emplace_back([](ArcModel&) {});
  for (int i = 0; i < k; ++i) {
    const WitnessSlot& s = e.slots[i];
    int vi = e.core[i];
    int vj = e.core[(i + 1) % k];
    if (!s.pair && s.u == v) {
      candidates.emplace_back([=](ArcModel& m) {
        m.arcs[vi] = {p.l(i + 1, +1), p.l(i, -1)};
        m.arcs[vj] = {p.r(i + 1, +1), p.r(i, -1)};
      });
    }
    if (s.pair && s.u == v) {
      candidates.emplace_back([=](ArcModel& m) { m.arcs[vi] = {p.m(i, +1), p.l(i, -1)}; });
    }
  }
  for (int i = 0; i < k; ++i) {
    // v = z_{i-1}: A_{v_i} now ends just before m_i.
    const WitnessSlot& prev = e.slots[(i + k - 1) % k];
    int vi = e.core[i];
    if (prev.pair && prev.z == v) {
      candidates.emplace_back([=](ArcModel& m) { m.arcs[vi] = {p.r(i, +1), p.m(i, -1)}; });
    }
  }
  for (const auto& apply : candidates) {
    ArcModel m = base;
    apply(m);
    ArcModel out = submodel(m, rest);
    if (is_helly_model_of(out, target)) return out;
  }
  throw InternalError("no deletion model is a Helly model of G - " + std::to_string(v));
}

}  // namespace hca
