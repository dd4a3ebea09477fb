#include "hca/recognition.hpp"

#include <atomic>
#include <limits>

#include "hca/error.hpp"

namespace hca {

CliqueMatrix clique_matrix(const Graph& g) {
  CliqueMatrix out;
  out.cliques = maximal_cliques(g, kMaxCliqueRows);
  out.matrix = BinaryMatrix(static_cast<int>(out.cliques.size()), g.order());
  for (std::size_t r = 0; r < out.cliques.size(); ++r) {
    for (int v : out.cliques[r]) out.matrix.set(static_cast<int>(r), v, true);
  }
  return out;
}

std::optional<ArcModel> recognize_hca(const Graph& g) {
  ArcModel m;
  if (g.order() == 0) return m;
  CliqueMatrix cm = clique_matrix(g);
  auto order = circular_ones_row_order(cm.matrix);
  if (!order) return std::nullopt;
  int p = static_cast<int>(order->size());
  m.circle_size = p;
  m.arcs.resize(g.order());
  for (int v = 0; v < g.order(); ++v) {
    auto in = [&](int pos) { return cm.cliques[(*order)[(pos + p) % p]].contains(v); };
    int count = 0;
    int start = -1;
    for (int pos = 0; pos < p; ++pos) {
      if (!in(pos)) continue;
      ++count;
      if (!in(pos - 1)) start = pos;
    }
    if (count == p) {
      m.arcs[v] = {0, p - 1, true};
      continue;
    }
    m.arcs[v] = {start, (start + count - 1) % p};
  }
  if (!(intersection_graph(m) == g) || !helly_report(m).is_helly) {
    throw InternalError("clique-order model does not certify the graph");
  }
  return m;
}

VertexSet minimal_non_hca(const Graph& g) {
  if (is_hca(g)) throw InputError("minimal_non_hca: graph is HCA");
  VertexSet s = g.vertices();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int v : s) {
      VertexSet t = s - VertexSet::single(v);
      if (!is_hca(induced_subgraph(g, t).graph)) {
        s = t;
        progress = true;
        break;
      }
    }
  }
  return s;
}

namespace {

struct SlotSearch {
  const Graph& g;
  std::vector<int> core;
  VertexSet q;
  VertexSet outside;
  // Per outside vertex, the last slot index able to cover it.
  std::vector<int> last_slot;
  std::vector<std::vector<WitnessSlot>> options;
  std::vector<WitnessSlot> chosen;

  bool prepare() {
    int k = static_cast<int>(core.size());
    last_slot.assign(g.order(), -1);
    options.assign(k, {});
    std::vector<int> pos(g.order(), -1);
    for (int i = 0; i < k; ++i) pos[core[i]] = i;
    std::vector<VertexSet> misses_only(k);
    for (int x : outside) {
      VertexSet nb = g.non_neighbors(x) & q;
      if (nb.size() == 1) {
        int t = pos[nb.first()];
        misses_only[t].insert(x);
        last_slot[x] = t == 0 ? k - 1 : t;  // as u_t or z_{t-1}
        continue;
      }
      if (nb.size() != 2) return false;
      int a = pos[nb.first()];
      int b = pos[(nb - VertexSet::single(nb.first())).first()];
      int t = (a + 1) % k == b ? a : ((b + 1) % k == a ? b : -1);
      if (t < 0) return false;
      options[t].push_back(WitnessSlot::single(x));
      last_slot[x] = t;
    }
    for (int i = 0; i < k; ++i) {
      if (options[i].size() > 1) return false;  // both singles would need slot i
      for (int u : misses_only[i]) {
        for (int z : misses_only[(i + 1) % k] & g.neighbors(u)) {
          options[i].push_back(WitnessSlot::make_pair(u, z));
        }
      }
    }
    return true;
  }

  bool extend(int i, VertexSet covered) {
    int k = static_cast<int>(core.size());
    for (int x : outside - covered) {
      if (last_slot[x] < i) return false;
    }
    if (i == k) return true;
    for (const auto& s : options[i]) {
      VertexSet c = covered;
      c.insert(s.u);
      if (s.pair) c.insert(s.z);
      chosen[i] = s;
      if (extend(i + 1, c)) return true;
    }
    return false;
  }
};

std::optional<ObstacleEnumeration> search_core(const Graph& g, const std::vector<int>& core) {
  SlotSearch s{g, core, VertexSet::from(core), {}, {}, {}, {}};
  s.outside = g.vertices() - s.q;
  if (!s.prepare()) return std::nullopt;
  s.chosen.assign(core.size(), {});
  if (!s.extend(0, VertexSet{})) return std::nullopt;
  return ObstacleEnumeration{core, s.chosen};
}

// Core sequences of length k with v_1 the minimum, in lexicographic order.
void list_cores(const Graph& g, int k, std::vector<int>& prefix, VertexSet cand,
                std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == k) {
    out.push_back(prefix);
    return;
  }
  for (int v : cand) {
    prefix.push_back(v);
    list_cores(g, k, prefix, cand & g.neighbors(v), out);
    prefix.pop_back();
  }
}

std::vector<std::vector<int>> cores_of_length(const Graph& g, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  for (int v1 = 0; v1 < g.order(); ++v1) {
    prefix = {v1};
    VertexSet above(g.vertices().bits() & ~((Bits{2} << v1) - 1));
    list_cores(g, k, prefix, g.neighbors(v1) & above, out);
  }
  return out;
}

void check_search_bound(const Graph& g) {
  if (g.order() > kMaxObstacleSearch) {
    throw BoundExceeded("obstacle search is limited to 12 vertices");
  }
}

}  // namespace

std::optional<ObstacleEnumeration> find_obstacle_enumeration_serial(const Graph& g) {
  check_search_bound(g);
  for (int k = 3; k <= g.order(); ++k) {
    for (const auto& core : cores_of_length(g, k)) {
      if (auto e = search_core(g, core)) return e;
    }
  }
  return std::nullopt;
}

std::optional<ObstacleEnumeration> find_obstacle_enumeration(const Graph& g) {
  check_search_bound(g);
  for (int k = 3; k <= g.order(); ++k) {
    auto cores = cores_of_length(g, k);
    const long count = static_cast<long>(cores.size());
    std::vector<std::optional<ObstacleEnumeration>> found(cores.size());
    std::atomic<long> best{std::numeric_limits<long>::max()};
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      if (i > best.load(std::memory_order_relaxed)) continue;
      found[i] = search_core(g, cores[i]);
      if (!found[i]) continue;
      long cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
    long b = best.load();
    if (b < count) return found[b];
  }
  return std::nullopt;
}

}  // namespace hca
