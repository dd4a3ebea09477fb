#include "hca/isomorphism.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace hca {

bool is_induced_copy(const Graph& host, const Graph& pattern, const IsoMapping& m) {
  const auto& map = m.map;
  if (static_cast<int>(map.size()) != pattern.order()) return false;
  VertexSet seen;
  for (int x : map) {
    if (x < 0 || x >= host.order() || seen.contains(x)) return false;
    seen.insert(x);
  }
  for (int a = 0; a < pattern.order(); ++a) {
    for (int b = a + 1; b < pattern.order(); ++b) {
      if (pattern.adjacent(a, b) != host.adjacent(map[a], map[b])) return false;
    }
  }
  return true;
}

namespace {

struct CopySearch {
  const Graph& host;
  const Graph& pattern;
  VertexSet within;
  bool exact_degrees;
  std::vector<int> order;  // pattern vertices in search order
  std::vector<int> image;  // image[t] = host vertex for order[t]
  std::vector<std::uint64_t> host_sig;
  std::vector<std::uint64_t> pattern_sig;

  bool compatible(int h, int g) const {
    if (exact_degrees) return host_sig[g] == pattern_sig[h];
    int pd = pattern.degree(h);
    int pn = pattern.order() - 1 - pd;
    int gd = (host.neighbors(g) & within).size();
    int gn = within.size() - 1 - gd;
    return gd >= pd && gn >= pn;
  }

  bool extend(std::size_t t, VertexSet used) {
    if (t == order.size()) return true;
    int h = order[t];
    VertexSet cand = within - used;
    for (std::size_t s = 0; s < t; ++s) {
      VertexSet nb = host.neighbors(image[s]);
      cand &= pattern.adjacent(h, order[s]) ? nb : (within - nb);
    }
    for (int g : cand) {
      if (!compatible(h, g)) continue;
      image[t] = g;
      if (extend(t + 1, used | VertexSet::single(g))) return true;
    }
    return false;
  }
};

// Degree plus sorted neighbor degrees, folded into one word.
std::vector<std::uint64_t> degree_signatures(const Graph& g) {
  std::vector<std::uint64_t> sig(g.order());
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> nd;
    for (int u : g.neighbors(v)) nd.push_back(g.degree(u));
    std::sort(nd.begin(), nd.end());
    std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(g.degree(v));
    for (int d : nd) h = (h ^ static_cast<std::uint64_t>(d + 1)) * 1099511628211ULL;
    sig[v] = h;
  }
  return sig;
}

// Pattern vertices ordered so each one has as many already-placed
// neighbors as possible; keeps the candidate sets small.
std::vector<int> search_order(const Graph& p) {
  std::vector<int> order;
  VertexSet placed;
  while (placed.size() < p.order()) {
    int best = -1;
    std::pair<int, int> key{-1, -1};
    for (int v : p.vertices() - placed) {
      std::pair<int, int> k{(p.neighbors(v) & placed).size(), p.degree(v)};
      if (k > key) {
        key = k;
        best = v;
      }
    }
    order.push_back(best);
    placed.insert(best);
  }
  return order;
}

std::optional<IsoMapping> run_copy_search(const Graph& host, VertexSet within, const Graph& pattern,
                                          bool exact) {
  if (pattern.order() > within.size()) return std::nullopt;
  CopySearch s{host, pattern, within, exact, search_order(pattern), {}, {}, {}};
  s.image.assign(pattern.order(), -1);
  if (exact) {
    s.host_sig = degree_signatures(host);
    s.pattern_sig = degree_signatures(pattern);
  }
  if (!s.extend(0, VertexSet{})) return std::nullopt;
  IsoMapping m;
  m.map.assign(pattern.order(), -1);
  for (std::size_t t = 0; t < s.order.size(); ++t) m.map[s.order[t]] = s.image[t];
  return m;
}

}  // namespace

std::optional<IsoMapping> find_induced_copy(const Graph& host, const Graph& pattern) {
  return run_copy_search(host, host.vertices(), pattern, false);
}

std::optional<IsoMapping> find_induced_copy_within(const Graph& host, VertexSet within,
                                                   const Graph& pattern) {
  return run_copy_search(host, within & host.vertices(), pattern, false);
}

std::optional<IsoMapping> isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return std::nullopt;
  auto sg = degree_signatures(g);
  auto sh = degree_signatures(h);
  std::sort(sg.begin(), sg.end());
  std::sort(sh.begin(), sh.end());
  if (sg != sh) return std::nullopt;
  return run_copy_search(g, g.vertices(), h, true);
}

std::optional<IsoMapping> induced_copy_on(const Graph& host, VertexSet s, const Graph& pattern) {
  auto sub = induced_subgraph(host, s);
  auto iso = isomorphic(sub.graph, pattern);
  if (!iso) return std::nullopt;
  for (int& x : iso->map) x = sub.to_parent[x];
  return iso;
}

std::uint64_t CanonicalForm::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xFFU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(n));
  for (Bits r : rows) mix(r);
  return h;
}

std::string CanonicalForm::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash()));
  return buf;
}

Graph graph_from_canonical(const CanonicalForm& f) {
  Graph g(f.n);
  for (int i = 0; i < f.n; ++i) {
    for (int j : VertexSet(f.rows[i])) {
      if (j > i) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

using Cells = std::vector<std::vector<int>>;

Bits mask_of(const std::vector<int>& cell) {
  Bits m = 0;
  for (int v : cell) m |= Bits{1} << v;
  return m;
}

// Split cells by neighbor counts into each splitter until equitable. The
// resulting cell sequence depends only on isomorphism-invariant data.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      Bits splitter = mask_of(cells[s]);
      Cells next;
      next.reserve(cells.size() + 4);
      bool split = false;
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) keyed.emplace_back(std::popcount(g.neighbors(v).bits() & splitter), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](auto& a, auto& b) { return a.first < b.first; });
        if (keyed.front().first == keyed.back().first) {
          next.push_back(std::move(cell));
          continue;
        }
        split = true;
        std::vector<int> group{keyed[0].second};
        for (std::size_t i = 1; i < keyed.size(); ++i) {
          if (keyed[i].first != keyed[i - 1].first) {
            next.push_back(std::move(group));
            group.clear();
          }
          group.push_back(keyed[i].second);
        }
        next.push_back(std::move(group));
      }
      cells = std::move(next);
      if (split) changed = true;
    }
  }
}

struct CanonSearch {
  const Graph& g;
  bool have_best = false;
  std::vector<Bits> best_code;
  std::vector<int> best_order;
  std::vector<std::vector<int>> automorphisms;  // as vertex maps

  static constexpr std::size_t kMaxStoredAutomorphisms = 128;

  std::vector<Bits> code_for(const std::vector<int>& order) const {
    int n = g.order();
    std::vector<int> label(n);
    for (int i = 0; i < n; ++i) label[order[i]] = i;
    std::vector<Bits> rows(n, 0);
    for (int i = 0; i < n; ++i) {
      for (int u : g.neighbors(order[i])) rows[i] |= Bits{1} << label[u];
    }
    return rows;
  }

  void leaf(const Cells& cells) {
    std::vector<int> order;
    order.reserve(cells.size());
    for (auto& c : cells) order.push_back(c[0]);
    auto code = code_for(order);
    if (!have_best || code < best_code) {
      have_best = true;
      best_code = std::move(code);
      best_order = std::move(order);
    } else if (code == best_code) {
      std::vector<int> sigma(g.order());
      bool identity = true;
      for (std::size_t i = 0; i < order.size(); ++i) {
        sigma[order[i]] = best_order[i];
        identity = identity && order[i] == best_order[i];
      }
      if (!identity && automorphisms.size() < kMaxStoredAutomorphisms) {
        automorphisms.push_back(std::move(sigma));
      }
    }
  }

  bool twins(int a, int b) const {
    VertexSet na = g.neighbors(a) - VertexSet::single(b);
    VertexSet nb = g.neighbors(b) - VertexSet::single(a);
    return na == nb;
  }

  // Orbit representative array under the stored automorphisms that fix
  // every vertex of `path`.
  std::vector<int> orbits(const std::vector<int>& path) const {
    std::vector<int> parent(g.order());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& sigma : automorphisms) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](int v) { return sigma[v] == v; });
      if (!fixes) continue;
      for (int v = 0; v < g.order(); ++v) {
        int a = find(v);
        int b = find(sigma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < g.order(); ++v) parent[v] = find(v);
    return parent;
  }

  void search(Cells cells, std::vector<int>& path) {
    refine(g, cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) {
        target = i;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<int> candidates = cells[target];
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> explored;
    for (int v : candidates) {
      bool skip = std::any_of(explored.begin(), explored.end(), [&](int w) { return twins(v, w); });
      if (!skip && !explored.empty() && !automorphisms.empty()) {
        auto orb = orbits(path);
        skip = std::any_of(explored.begin(), explored.end(), [&](int w) { return orb[w] == orb[v]; });
      }
      if (skip) continue;
      Cells next;
      next.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          next.push_back(cells[i]);
          continue;
        }
        next.push_back({v});
        std::vector<int> rest;
        for (int u : cells[i]) {
          if (u != v) rest.push_back(u);
        }
        next.push_back(std::move(rest));
      }
      path.push_back(v);
      search(std::move(next), path);
      path.pop_back();
      explored.push_back(v);
    }
  }
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  CanonicalLabeling out;
  out.form.n = g.order();
  if (g.order() == 0) return out;
  CanonSearch s{g, false, {}, {}, {}};
  Cells initial{g.vertices().members()};
  std::vector<int> path;
  s.search(std::move(initial), path);
  out.form.rows = std::move(s.best_code);
  out.order = std::move(s.best_order);
  return out;
}

}  // namespace hca
