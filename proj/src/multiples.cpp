#include "hca/multiples.hpp"

#include <initializer_list>
#include <string>

#include "hca/catalog.hpp"
#include "hca/error.hpp"

namespace hca {

namespace {

int mod7(int i) { return ((i % 7) + 7) % 7; }

bool complete_to(const Graph& g, VertexSet a, VertexSet b) {
  for (int x : a) {
    if (!b.subset_of(g.neighbors(x))) return false;
  }
  return true;
}

bool anticomplete_to(const Graph& g, VertexSet a, VertexSet b) {
  for (int x : a) {
    if (g.neighbors(x).intersects(b)) return false;
  }
  return true;
}

bool is_clique_set(const Graph& g, VertexSet s) {
  for (int x : s) {
    if (!(s - VertexSet::single(x)).subset_of(g.neighbors(x))) return false;
  }
  return true;
}

}  // namespace

Validation validate_partition(const Graph& g, const MultiplePartition& p) {
  auto fail = [](std::string msg) { return Validation{false, std::move(msg)}; };
  VertexSet all;
  int total = 0;
  auto add = [&](VertexSet s) {
    all = all | s;
    total += s.size();
  };
  for (VertexSet s : p.v) add(s);
  add(p.u);
  add(p.w);
  if (all != g.vertices() || total != g.order()) return fail("sets do not partition V(G)");
  for (int i = 0; i < 7; ++i) {
    if (p.v[i].empty()) return fail("(1) V_" + std::to_string(i + 1) + " is empty");
  }
  if (p.u.empty()) return fail("(1) U is empty");
  for (int i = 0; i < 7; ++i) {
    if (!is_clique_set(g, p.v[i])) return fail("(2) V_" + std::to_string(i + 1) + " is not a clique");
  }
  if (!is_clique_set(g, p.u) || !is_clique_set(g, p.w)) return fail("(2) U or W is not a clique");
  for (int i = 0; i < 7; ++i) {
    for (int d : {1, 2}) {
      if (!complete_to(g, p.v[i], p.v[mod7(i + d)])) {
        return fail("(3) V_" + std::to_string(i + 1) + " not complete to V_" + std::to_string(mod7(i + d) + 1));
      }
    }
    if (!anticomplete_to(g, p.v[i], p.v[mod7(i + 3)])) {
      return fail("(3) V_" + std::to_string(i + 1) + " not anticomplete to V_" + std::to_string(mod7(i + 3) + 1));
    }
    if (!complete_to(g, p.u, p.v[i])) return fail("(4) U not complete to V_" + std::to_string(i + 1));
  }
  if (p.w.empty()) return {};
  if (!p.j || *p.j < 0 || *p.j > 6) return fail("(5) W nonempty without j");
  int j = *p.j;
  for (int d : {2, 3, 4, 5}) {
    if (!complete_to(g, p.w, p.v[mod7(j + d)])) return fail("(5) W not complete to V_{j+" + std::to_string(d) + "}");
  }
  for (int d : {-1, 0, 1}) {
    if (!anticomplete_to(g, p.w, p.v[mod7(j + d)])) return fail("(5) W not anticomplete to V_{j" + std::to_string(d) + "}");
  }
  if (!anticomplete_to(g, p.w, p.u)) return fail("(5) W not anticomplete to U");
  return {};
}

namespace {

const std::vector<std::string> kTargets = {names::kClaw, names::kFiveWheel, names::kC4Star, names::kCo3K2,
                                           names::kCoP7};

class Grower {
 public:
  Grower(const Graph& g, MultiplesStats& stats) : g_(g), stats_(stats) {}

  void seed(const IsoMapping& j) {
    VertexSet s = j.image();
    int universal = -1;
    for (int x : s) {
      if ((s - VertexSet::single(x)).subset_of(g_.neighbors(x))) universal = x;
    }
    VertexSet ring = s - VertexSet::single(universal);
    // Walk the non-adjacency 7-cycle; its step is 3 in the lemma's labels.
    int prev = -1;
    int cur = ring.first();
    for (int step = 0; step < 7; ++step) {
      rep_[mod7(3 * step)] = cur;
      p_.v[mod7(3 * step)].insert(cur);
      VertexSet miss = (ring - g_.neighbors(cur)) - VertexSet::single(cur);
      int next = miss.first();
      if (next == prev) next = (miss - VertexSet::single(prev)).first();
      prev = cur;
      cur = next;
    }
    u_ = universal;
    p_.u.insert(universal);
    base_ = s;
  }

  // Returns a forbidden copy, or nullopt after placing x.
  std::optional<ForbiddenCopy> insert(int x) {
    x_ = x;
    nx_ = g_.neighbors(x);
    ++stats_.inserted;
    for (int i = 0; i < 7; ++i) {
      if (miss(V(i - 2)) && miss(V(i + 2))) return case1(i);
    }
    for (int i = 0; i < 7; ++i) {
      if (miss(V(i - 1)) && miss(V(i + 1))) return case2(i);
    }
    for (int i = 0; i < 7; ++i) {
      if (miss(V(i - 3)) && miss(V(i + 3))) return case3(i);
    }
    for (int i = 0; i < 7; ++i) {
      if (miss(V(i))) return claim(names::kCoP7, {{x_, nonnb(V(i)), v(i + 3), v(i - 1), v(i + 2), v(i - 2), v(i + 1)}});
    }
    return case5();
  }

  const MultiplePartition& partition() const { return p_; }
  VertexSet placed() const {
    VertexSet s = p_.u | p_.w;
    for (VertexSet c : p_.v) s = s | c;
    return s;
  }

 private:
  VertexSet V(int i) const { return p_.v[mod7(i)]; }
  int v(int i) const { return rep_[mod7(i)]; }
  bool miss(VertexSet s) const { return !(s - nx_).empty(); }
  int nonnb(VertexSet s) const { return (s - nx_).first(); }
  bool adj(int a, int b) const { return g_.adjacent(a, b); }

  std::optional<ForbiddenCopy> claim(const char* name, std::initializer_list<std::initializer_list<int>> sets) {
    for (auto list : sets) {
      if (auto c = copy_on(g_, VertexSet(list), name)) return c;
    }
    return fallback();
  }

  std::optional<ForbiddenCopy> fallback() {
    ++stats_.fallbacks;
    VertexSet local = base_ | VertexSet::single(x_) | p_.w;
    if (auto c = find_first_copy(g_, local, kTargets)) return c;
    if (auto c = find_first_copy(g_, placed() | VertexSet::single(x_), kTargets)) return c;
    throw InternalError("multiples: no forbidden graph found where the lemma promises one");
  }

  std::optional<ForbiddenCopy> case1(int i) {
    int b1 = nonnb(V(i - 2));
    int b2 = nonnb(V(i + 2));
    VertexSet seen = (V(i) | V(i + 3)) & nx_;
    if (!seen.empty()) return claim(names::kClaw, {{b1, b2, x_, seen.first()}});
    return claim(names::kC4Star, {{b1, v(i), b2, v(i + 3), x_}});
  }

  std::optional<ForbiddenCopy> case2(int i) {
    int b1 = nonnb(V(i - 1));
    int b2 = nonnb(V(i + 1));
    VertexSet hub = (V(i) | p_.u) & nx_;
    if (!hub.empty()) return claim(names::kFiveWheel, {{v(i - 2), b1, b2, v(i + 2), x_, hub.first()}});
    if (VertexSet s = V(i + 1) & nx_; !s.empty()) {
      return claim(names::kCoP7, {{u_, x_, v(i), v(i - 3), s.first(), v(i - 2), v(i + 2)}});
    }
    if (VertexSet s = V(i - 1) & nx_; !s.empty()) {
      return claim(names::kCoP7, {{u_, x_, v(i), v(i + 3), s.first(), v(i + 2), v(i - 2)}});
    }
    for (int w : p_.w) {
      int j = *p_.j;
      if (!adj(x_, w)) {
        int c = adj(x_, v(j - 2)) ? v(j - 2) : v(j + 2);
        return claim(names::kClaw, {{x_, w, u_, c}});
      }
      int d = mod7(i - j);
      if (d == 1 || d == 2) return claim(names::kFiveWheel, {{x_, w, v(j + 2), u_, v(j - 1), v(j - 3)}});
      if (d == 5 || d == 6) return claim(names::kFiveWheel, {{x_, w, v(j - 2), u_, v(j + 1), v(j + 3)}});
      if (d == 3 || d == 4) {
        return claim(names::kFiveWheel,
                     {{x_, w, v(j - 3), u_, v(j), v(j - 2)}, {x_, w, v(j + 3), u_, v(j), v(j + 2)}});
      }
    }
    p_.w.insert(x_);
    p_.j = mod7(i);
    return std::nullopt;
  }

  std::optional<ForbiddenCopy> case3(int i) {
    int bm = nonnb(V(i - 3));
    int bp = nonnb(V(i + 3));
    if (VertexSet s = V(i + 3) & nx_; !s.empty()) {
      return claim(names::kCoP7, {{x_, bm, v(i + 1), v(i - 2), v(i + 2), v(i - 1), s.first()}});
    }
    if (VertexSet s = V(i - 3) & nx_; !s.empty()) {
      return claim(names::kCoP7, {{x_, bp, v(i - 1), v(i + 2), v(i - 2), v(i + 1), s.first()}});
    }
    if (miss(p_.u)) {
      return claim(names::kCoP7, {{nonnb(p_.u), x_, v(i + 3), v(i - 1), v(i + 2), v(i - 2), v(i + 1)}});
    }
    for (int w : p_.w) {
      int j = *p_.j;
      int d = mod7(i - j);
      bool a = adj(x_, w);
      if (d == 1 && a) return claim(names::kCoP7, {{v(j + 2), v(j - 2), x_, v(j - 3), v(j), w, u_}});
      if (d == 6 && a) return claim(names::kCoP7, {{v(j - 2), v(j + 2), x_, v(j + 3), v(j), w, u_}});
      if ((d == 2 || d == 3) && !a) return claim(names::kClaw, {{w, x_, v(j - 1), v(j - 3)}});
      if ((d == 4 || d == 5) && !a) return claim(names::kClaw, {{w, x_, v(j + 1), v(j + 3)}});
      // x joins V_j while seeing w: the case analysis lists no subgraph here.
      if (d == 0 && a) return fallback();
    }
    p_.v[mod7(i)].insert(x_);
    return std::nullopt;
  }

  std::optional<ForbiddenCopy> case5() {
    if (miss(p_.u)) return claim(names::kCo3K2, {{x_, nonnb(p_.u), v(-2), v(1), v(0), v(3)}});
    for (int w : p_.w) {
      int j = *p_.j;
      if (adj(x_, w)) return claim(names::kFiveWheel, {{w, v(j - 2), v(j - 1), v(j + 1), v(j + 2), x_}});
    }
    p_.u.insert(x_);
    return std::nullopt;
  }

  const Graph& g_;
  MultiplesStats& stats_;
  MultiplePartition p_;
  std::array<int, 7> rep_{};
  int u_ = -1;
  VertexSet base_;
  int x_ = -1;
  VertexSet nx_;
};

}  // namespace

MultiplesOutcome multiple_partition_coC7(const Graph& g, const IsoMapping& j, MultiplesStats* stats) {
  if (!is_induced_copy(g, co_c7_base(false), j)) throw InputError("mapping is not an induced co-C7*");
  MultiplesStats local;
  Grower grower(g, stats ? *stats : local);
  grower.seed(j);
  VertexSet base = j.image();
  for (int x : g.vertices() - base) {
    if (auto f = grower.insert(x)) {
      if (!verify_copy(g, *f)) throw InternalError("multiples: unverified forbidden copy");
      return *f;
    }
  }
  const MultiplePartition& p = grower.partition();
  if (auto v = validate_partition(g, p); !v) throw InternalError("multiples: partition fails " + v.violation);
  return p;
}

}  // namespace hca
