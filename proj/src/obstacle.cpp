#include "hca/obstacle.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hca/catalog.hpp"
#include "hca/error.hpp"
#include "hca/text_lines.hpp"

namespace hca {

VertexSet ObstacleEnumeration::witnesses() const {
  VertexSet w;
  for (const auto& s : slots) {
    w.insert(s.u);
    if (s.pair) w.insert(s.z);
  }
  return w;
}

int ObstacleEnumeration::index_of(int v) const {
  auto it = std::find(core.begin(), core.end(), v);
  return it == core.end() ? -1 : static_cast<int>(it - core.begin());
}

bool ObstacleEnumeration::together(int y1, int y2) const {
  return std::any_of(slots.begin(), slots.end(), [&](const WitnessSlot& s) {
    return s.pair && ((s.u == y1 && s.z == y2) || (s.u == y2 && s.z == y1));
  });
}

ObstacleEnumeration ObstacleEnumeration::rotated(int shift) const {
  ObstacleEnumeration out;
  int n = k();
  for (int t = 0; t < n; ++t) {
    out.core.push_back(core[(t + shift) % n]);
    out.slots.push_back(slots[(t + shift) % n]);
  }
  return out;
}

ObstacleEnumeration ObstacleEnumeration::reflected() const {
  ObstacleEnumeration out;
  int n = k();
  for (int t = 0; t < n; ++t) {
    out.core.push_back(core[(n - t) % n]);
    // Edge (core[-t], core[-t-1]) is the old slot -t-1 read backwards.
    WitnessSlot s = slots[(2 * n - t - 1) % n];
    if (s.pair) std::swap(s.u, s.z);
    out.slots.push_back(s);
  }
  return out;
}

ObstacleEnumeration ObstacleEnumeration::relabeled(const std::vector<int>& map) const {
  ObstacleEnumeration out = *this;
  for (int& v : out.core) v = map.at(v);
  for (auto& s : out.slots) {
    s.u = map.at(s.u);
    if (s.pair) s.z = map.at(s.z);
  }
  return out;
}

ObstacleEnumeration ObstacleEnumeration::restricted_to(VertexSet s) const {
  if (!vertices().subset_of(s)) throw InputError("enumeration leaves the vertex set");
  std::vector<int> map(kMaxVertices, -1);
  int next = 0;
  for (int v : s) map[v] = next++;
  return relabeled(map);
}

namespace {

Validation fail(std::string msg) { return {false, std::move(msg)}; }

std::string slot_name(int i) { return "slot " + std::to_string(i + 1); }

}  // namespace

VertexSet core_non_neighbors(const Graph& g, const ObstacleEnumeration& e, int y) {
  return g.non_neighbors(y) & e.core_set();
}

Validation validate_enumeration(const Graph& g, const ObstacleEnumeration& e) {
  int k = e.k();
  if (k < 3) return fail("core has fewer than 3 vertices");
  if (static_cast<int>(e.slots.size()) != k) return fail("slot count differs from core length");
  auto in_range = [&](int v) { return v >= 0 && v < g.order(); };
  for (int v : e.core) {
    if (!in_range(v)) return fail("core vertex " + std::to_string(v) + " out of range");
  }
  for (const auto& s : e.slots) {
    if (!in_range(s.u) || (s.pair && !in_range(s.z))) return fail("witness out of range");
  }
  VertexSet q = e.core_set();
  if (q.size() != k) return fail("core vertices not distinct");
  if (!g.is_clique(q)) return fail("core not a clique");
  for (int i = 0; i < k; ++i) {
    const auto& s = e.slots[i];
    int vi = e.core[i];
    int vj = e.core[(i + 1) % k];
    if (!s.pair) {
      if (q.contains(s.u)) return fail(slot_name(i) + ": witness is a core vertex");
      if (core_non_neighbors(g, e, s.u) != VertexSet{vi, vj}) {
        return fail(slot_name(i) + ": single witness must miss exactly v_i and v_{i+1}");
      }
      continue;
    }
    if (s.u == s.z) return fail(slot_name(i) + ": pair members coincide");
    if (q.contains(s.u) || q.contains(s.z)) return fail(slot_name(i) + ": witness is a core vertex");
    if (core_non_neighbors(g, e, s.u) != VertexSet{vi}) {
      return fail(slot_name(i) + ": first pair witness must miss exactly v_i");
    }
    if (core_non_neighbors(g, e, s.z) != VertexSet{vj}) {
      return fail(slot_name(i) + ": second pair witness must miss exactly v_{i+1}");
    }
    if (!g.adjacent(s.u, s.z)) return fail(slot_name(i) + ": pair witnesses not adjacent");
  }
  return {};
}

bool consecutive(const ObstacleEnumeration& e, int a, int b) {
  int ia = e.index_of(a);
  int ib = e.index_of(b);
  if (ia < 0 || ib < 0 || ia == ib) return false;
  int k = e.k();
  return (ia + 1) % k == ib || (ib + 1) % k == ia;
}

std::pair<int, int> witness_bounds(const Graph& g, const ObstacleEnumeration& e, int y) {
  if (!e.witnesses().contains(y)) {
    throw InputError("vertex " + std::to_string(y) + " is not a witness");
  }
  VertexSet nb = core_non_neighbors(g, e, y);
  if (nb.size() == 1) return {nb.first(), nb.first()};
  if (nb.size() == 2) {
    for (int i = 0; i < e.k(); ++i) {
      int a = e.core[i];
      int b = e.core[(i + 1) % e.k()];
      if (nb == VertexSet{a, b}) return {a, b};
    }
  }
  throw InputError("witness " + std::to_string(y) + " has core non-neighbors " + to_string(nb));
}

const char* to_string(EdgeClass::Kind k) {
  switch (k) {
    case EdgeClass::InnerShortcut:
      return "inner-shortcut";
    case EdgeClass::OuterShortcut:
      return "outer-shortcut";
    case EdgeClass::Cover:
      return "cover";
    case EdgeClass::Valid:
      return "valid";
  }
  return "?";
}

EdgePredicates edge_predicates(const Graph& g, const ObstacleEnumeration& e, int y1, int y2) {
  VertexSet n1 = core_non_neighbors(g, e, y1);
  VertexSet n2 = core_non_neighbors(g, e, y2);
  auto [l1, r1] = witness_bounds(g, e, y1);
  auto [l2, r2] = witness_bounds(g, e, y2);
  auto inner = [&](int la, VertexSet na, int rb, VertexSet nb) {
    return !nb.contains(la) && !na.contains(rb) && la != rb && !consecutive(e, la, rb);
  };
  EdgePredicates p;
  p.inner_12 = inner(l1, n1, r2, n2);
  p.inner_21 = inner(l2, n2, r1, n1);
  p.outer = n1.size() == 1 && n2.size() == 1 && consecutive(e, n1.first(), n2.first()) &&
            !e.together(y1, y2);
  p.cover = e.core_set().subset_of(n1 | n2);
  p.valid = n1.subset_of(n2) || n2.subset_of(n1) || e.together(y1, y2);
  return p;
}

EdgeClass classify_edge(const Graph& g, const ObstacleEnumeration& e, int y1, int y2) {
  VertexSet w = e.witnesses();
  if (!w.contains(y1) || !w.contains(y2)) throw InputError("classify_edge: endpoint not a witness");
  if (!g.adjacent(y1, y2)) throw InputError("classify_edge: witnesses not adjacent");
  EdgePredicates p = edge_predicates(g, e, y1, y2);
  int holds = (p.inner_12 || p.inner_21 ? 1 : 0) + (p.outer ? 1 : 0) + (p.cover ? 1 : 0) +
              (p.valid ? 1 : 0);
  if (holds != 1) {
    throw InternalError("edge " + std::to_string(y1) + "-" + std::to_string(y2) + " falls into " +
                        std::to_string(holds) + " classes");
  }
  if (p.inner_12) return {EdgeClass::InnerShortcut, y1, y2};
  if (p.inner_21) return {EdgeClass::InnerShortcut, y2, y1};
  if (p.outer) return {EdgeClass::OuterShortcut, y1, y2};
  if (p.cover) return {EdgeClass::Cover, y1, y2};
  return {EdgeClass::Valid, y1, y2};
}

std::vector<std::pair<int, int>> witness_edges(const Graph& g, const ObstacleEnumeration& e) {
  std::vector<std::pair<int, int>> out;
  VertexSet w = e.witnesses();
  for (int a : w) {
    for (int b : g.neighbors(a) & w) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

bool is_essential(const Graph& g, const ObstacleEnumeration& e) {
  if (auto v = validate_enumeration(g, e); !v) throw InputError("invalid enumeration: " + v.violation);
  for (auto [a, b] : witness_edges(g, e)) {
    if (classify_edge(g, e, a, b).kind != EdgeClass::Valid) return false;
  }
  return true;
}

PseudoDominoResult classify_pseudo_domino(const Graph& g, const PseudoDominoLabels& l) {
  VertexSet all{l.a1, l.a2, l.b1, l.b2, l.c1, l.c2};
  if (all.size() != 6 || !all.subset_of(g.vertices())) {
    throw InputError("pseudo-domino labels must be 6 distinct vertices");
  }
  std::pair<int, int> edges[] = {{l.a1, l.a2}, {l.b1, l.b2}, {l.c1, l.c2}, {l.a1, l.b1},
                                 {l.a2, l.b2}, {l.b1, l.c1}, {l.b2, l.c2}};
  std::pair<int, int> non_edges[] = {{l.a1, l.b2}, {l.a2, l.b1}, {l.b1, l.c2}, {l.b2, l.c1}};
  for (auto [x, y] : edges) {
    if (!g.adjacent(x, y)) throw InputError("pseudo-domino: required edge missing");
  }
  for (auto [x, y] : non_edges) {
    if (g.adjacent(x, y)) throw InputError("pseudo-domino: required non-edge present");
  }
  bool h1 = g.adjacent(l.a1, l.c1);
  bool h2 = g.adjacent(l.a2, l.c2);
  bool d1 = g.adjacent(l.a1, l.c2);
  bool d2 = g.adjacent(l.a2, l.c1);

  auto copy = [&](VertexSet s, const Graph& pattern) {
    auto iso = induced_copy_on(g, s, pattern);
    if (!iso) throw InternalError("pseudo-domino: expected induced copy not found");
    return *iso;
  };
  // Each of D-c1, D-a2, D-c2, D-a1 is a pseudo-flag; a flag whose diagonal
  // is an edge but whose handle is not induces K23.
  auto without = [&](int v) { return all - VertexSet::single(v); };
  Graph k23 = complete_bipartite(2, 3);
  if (d1 && !h2) return {PseudoDominoResult::K23Copy, copy(without(l.c1), k23)};
  if (d1 && !h1) return {PseudoDominoResult::K23Copy, copy(without(l.a2), k23)};
  if (d2 && !h1) return {PseudoDominoResult::K23Copy, copy(without(l.c2), k23)};
  if (d2 && !h2) return {PseudoDominoResult::K23Copy, copy(without(l.a1), k23)};
  if (d1 || d2) return {PseudoDominoResult::HandlesPlusDiagonal, {}};
  int handles = (h1 ? 1 : 0) + (h2 ? 1 : 0);
  static constexpr PseudoDominoResult::Kind kinds[] = {PseudoDominoResult::Domino,
                                                       PseudoDominoResult::G3,
                                                       PseudoDominoResult::CoC6};
  return {kinds[handles], copy(all, pseudo_domino(handles))};
}

ObstacleEnumeration parse_obstacle(std::istream& in) {
  LineReader reader(in, "obstacle");
  auto header = reader.next();
  if (!header || header->size() != 2 || (*header)[0] != "obstacle") {
    reader.fail("expected 'obstacle <k>'");
  }
  int k = reader.to_int((*header)[1]);
  if (k < 3 || k > kMaxVertices) reader.fail("core length outside 3..64");
  auto core = reader.next();
  if (!core || static_cast<int>(core->size()) != k + 1 || (*core)[0] != "core") {
    reader.fail("expected 'core' followed by k vertices");
  }
  ObstacleEnumeration e;
  for (int i = 1; i <= k; ++i) e.core.push_back(reader.to_int((*core)[i]));
  e.slots.resize(k);
  std::vector<bool> seen(k, false);
  while (auto t = reader.next()) {
    const auto& tok = *t;
    if (tok[0] != "wit" || tok.size() < 4) reader.fail("expected 'wit <i> single|pair ...'");
    int i = reader.to_int(tok[1]);
    if (i < 1 || i > k) reader.fail("slot index outside 1..k");
    if (seen[i - 1]) reader.fail("slot " + std::to_string(i) + " given twice");
    seen[i - 1] = true;
    if (tok[2] == "single" && tok.size() == 4) {
      e.slots[i - 1] = WitnessSlot::single(reader.to_int(tok[3]));
    } else if (tok[2] == "pair" && tok.size() == 5) {
      e.slots[i - 1] = WitnessSlot::make_pair(reader.to_int(tok[3]), reader.to_int(tok[4]));
    } else {
      reader.fail("expected 'single <w>' or 'pair <u> <z>'");
    }
  }
  for (int i = 0; i < k; ++i) {
    if (!seen[i]) throw InputError("obstacle: slot " + std::to_string(i + 1) + " missing");
  }
  return e;
}

ObstacleEnumeration parse_obstacle_string(const std::string& text) {
  std::istringstream in(text);
  return parse_obstacle(in);
}

ObstacleEnumeration read_obstacle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_obstacle(in);
}

std::string format_obstacle(const ObstacleEnumeration& e) {
  std::ostringstream out;
  out << "obstacle " << e.k() << "\ncore";
  for (int v : e.core) out << ' ' << v;
  out << '\n';
  for (int i = 0; i < e.k(); ++i) {
    const auto& s = e.slots[i];
    out << "wit " << i + 1;
    if (s.pair) {
      out << " pair " << s.u << ' ' << s.z << '\n';
    } else {
      out << " single " << s.u << '\n';
    }
  }
  return out.str();
}

}  // namespace hca
