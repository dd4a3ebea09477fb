#include "hca/generator.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>

#include "hca/catalog.hpp"
#include "hca/concave_round.hpp"
#include "hca/error.hpp"

namespace hca {

bool is_legal(const ObstacleSpec& spec) {
  int k = spec.k();
  if (k < 3 || static_cast<int>(spec.boundaries.size()) != k) return false;
  for (int i = 0; i < k; ++i) {
    SlotType before = spec.slots[(i + k - 1) % k];
    SlotType after = spec.slots[i];
    Boundary b = spec.boundaries[i];
    if (b == Boundary::Merge && (before != SlotType::Pair || after != SlotType::Pair)) return false;
    if (before == SlotType::Single && after == SlotType::Single && b != Boundary::NonAdjacent) {
      return false;
    }
  }
  return true;
}

GeneratedObstacle gen_obstacle(const ObstacleSpec& spec) {
  if (!is_legal(spec)) throw InputError("illegal obstacle spec");
  int k = spec.k();
  int next_id = k;
  ObstacleEnumeration e;
  e.core.resize(k);
  std::iota(e.core.begin(), e.core.end(), 0);
  e.slots.resize(k);
  for (int i = 0; i < k; ++i) {
    if (spec.slots[i] == SlotType::Single) {
      e.slots[i] = WitnessSlot::single(next_id++);
      continue;
    }
    int u = (i > 0 && spec.boundaries[i] == Boundary::Merge) ? e.slots[i - 1].z : next_id++;
    int z = (i == k - 1 && spec.boundaries[0] == Boundary::Merge) ? e.slots[0].u : next_id++;
    e.slots[i] = WitnessSlot::make_pair(u, z);
  }

  Graph g(next_id);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) g.add_edge(a, b);
  }
  auto misses = [&](int y, int c) {
    for (int i = 0; i < k; ++i) {
      const WitnessSlot& s = e.slots[i];
      int next = (i + 1) % k;
      if (!s.pair && s.u == y && (c == i || c == next)) return true;
      if (s.pair && s.u == y && c == i) return true;
      if (s.pair && s.z == y && c == next) return true;
    }
    return false;
  };
  for (int y = k; y < next_id; ++y) {
    for (int c = 0; c < k; ++c) {
      if (!misses(y, c)) g.add_edge(y, c);
    }
  }
  for (int i = 0; i < k; ++i) {
    const WitnessSlot& s = e.slots[i];
    if (s.pair) g.add_edge(s.u, s.z);
    if (spec.boundaries[i] == Boundary::Adjacent) {
      g.add_edge(e.slots[(i + k - 1) % k].last(), s.first());
    }
  }
  return {g, e};
}

std::vector<int> bracelet_canonical(std::vector<int> s) {
  std::vector<int> best = s;
  for (int flip = 0; flip < 2; ++flip) {
    for (std::size_t r = 0; r < s.size(); ++r) {
      std::rotate(s.begin(), s.begin() + 1, s.end());
      best = std::min(best, s);
    }
    std::reverse(s.begin(), s.end());
  }
  return best;
}

namespace {

std::uint64_t pow3(int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= 3;
  return r;
}

std::uint64_t totient(int n) {
  std::uint64_t r = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    r -= r / p;
  }
  if (n > 1) r -= r / n;
  return r;
}

}  // namespace

std::uint64_t bracelet_count(int k) {
  if (k < 1 || k > 30) throw BoundExceeded("bracelet_count: k must lie in 1..30");
  std::uint64_t necklace_sum = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d == 0) necklace_sum += totient(d) * pow3(k / d);
  }
  std::uint64_t reflections = k % 2 == 1 ? pow3((k + 1) / 2) : 2 * pow3(k / 2);
  return (necklace_sum + k * reflections) / (2 * k);
}

std::uint64_t bracelet_count_brute_force(int k) {
  if (k < 1 || k > 12) throw BoundExceeded("bracelet_count_brute_force: k must lie in 1..12");
  std::set<std::vector<int>> seen;
  std::vector<int> s(k, 1);
  for (std::uint64_t code = 0; code < pow3(k); ++code) {
    std::uint64_t c = code;
    for (int i = 0; i < k; ++i, c /= 3) s[i] = static_cast<int>(c % 3) + 1;
    seen.insert(bracelet_canonical(s));
  }
  return seen.size();
}

namespace {

ObstacleSpec spec_at(int k, std::uint64_t index) {
  ObstacleSpec spec;
  spec.slots.resize(k);
  spec.boundaries.resize(k);
  std::uint64_t mask = index / pow3(k);
  std::uint64_t code = index % pow3(k);
  for (int i = 0; i < k; ++i) {
    spec.slots[i] = (mask >> i) & 1 ? SlotType::Single : SlotType::Pair;
    spec.boundaries[i] = static_cast<Boundary>(code % 3);
    code /= 3;
  }
  return spec;
}

struct Candidate {
  bool legal = false;
  std::optional<EssentialClass> cls;
};

Candidate make_candidate(int k, std::uint64_t index, const EnumerateOptions& options) {
  ObstacleSpec spec = spec_at(k, index);
  if (options.all_pair_only && index >= pow3(k)) return {};
  if (!is_legal(spec)) return {};
  GeneratedObstacle ob = gen_obstacle(spec);
  CanonicalForm form = canonical_form(ob.graph);
  return {true, EssentialClass{std::move(ob), std::move(spec), std::move(form)}};
}

void check_k(int k) {
  if (k < kMinEnumerateK || k > kMaxEnumerateK) {
    throw BoundExceeded("enumerate_essential: k must lie in 3..6");
  }
}

bool class_less(const EssentialClass& a, const EssentialClass& b) {
  auto key = [](const EssentialClass& c) {
    return std::make_tuple(c.obstacle.graph.order(), c.obstacle.graph.edge_count());
  };
  if (key(a) != key(b)) return key(a) < key(b);
  return a.form < b.form;
}

std::vector<EssentialClass> finish(std::vector<Candidate>& cands, const EnumerateOptions& options) {
  std::vector<EssentialClass> out;
  std::set<CanonicalForm> seen;
  for (auto& c : cands) {
    if (!c.cls || !seen.insert(c.cls->form).second) continue;
    out.push_back(std::move(*c.cls));
  }
  if (options.claw_free_only) {
    Graph cl = claw();
    std::erase_if(out, [&](const EssentialClass& c) {
      return find_induced_copy(c.obstacle.graph, cl).has_value();
    });
  }
  std::sort(out.begin(), out.end(), class_less);
  return out;
}

}  // namespace

std::vector<EssentialClass> enumerate_essential_serial(int k, const EnumerateOptions& options) {
  check_k(k);
  std::uint64_t total = pow3(k) << k;
  std::vector<Candidate> cands(total);
  for (std::uint64_t i = 0; i < total; ++i) cands[i] = make_candidate(k, i, options);
  return finish(cands, options);
}

std::vector<EssentialClass> enumerate_essential(int k, const EnumerateOptions& options) {
  check_k(k);
  const long total = static_cast<long>(pow3(k) << k);
  std::vector<Candidate> cands(total);
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < total; ++i) cands[i] = make_candidate(k, i, options);
  return finish(cands, options);
}

std::vector<NamedObstacle> obst8_catalog() {
  std::vector<std::pair<int, EssentialClass>> pool;  // (first k, class)
  std::set<CanonicalForm> seen;
  Graph five_wheel = wheel(5);
  for (int k = 3; k <= 5; ++k) {
    for (auto& c : enumerate_essential(k, {.claw_free_only = true})) {
      if (!seen.insert(c.form).second) continue;
      if (find_induced_copy(c.obstacle.graph, five_wheel)) continue;
      pool.emplace_back(k, std::move(c));
    }
  }
  if (pool.size() != 8) {
    throw InternalError("expected 8 claw-free, 5-wheel-free essential obstacles, found " +
                        std::to_string(pool.size()));
  }

  std::vector<NamedObstacle> out;
  std::vector<bool> taken(pool.size(), false);
  auto bind_iso = [&](const char* name, const Graph& target) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (!taken[i] && isomorphic(pool[i].second.obstacle.graph, target)) {
        taken[i] = true;
        out.push_back({name, pool[i].second});
        return;
      }
    }
    throw InternalError(std::string("no essential obstacle isomorphic to ") + name);
  };
  bind_iso(names::kCo3K2, catalog_graph({"Co3K2", {}}));
  bind_iso(names::kCoP7, catalog_graph({"CoP7", {}}));
  bind_iso(names::kNet, catalog_graph({"Net", {}}));
  bind_iso(names::kCo2P4, catalog_graph({"Co2P4", {}}));

  auto bind_unique = [&](const char* name, auto&& pred) {
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (taken[i] || !pred(pool[i])) continue;
      if (hit) throw InternalError(std::string("ambiguous binding for ") + name);
      hit = i;
    }
    if (!hit) throw InternalError(std::string("no class binds to ") + name);
    taken[*hit] = true;
    out.push_back({name, pool[*hit].second});
  };
  bind_unique(names::kCoF8, [](const auto& p) { return p.first == 5; });
  bind_unique(names::kCoH3, [](const auto& p) { return !is_concave_round(p.second.obstacle.graph); });

  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!taken[i]) rest.push_back(i);
  }
  std::sort(rest.begin(), rest.end(), [&](std::size_t a, std::size_t b) {
    return class_less(pool[a].second, pool[b].second);
  });
  out.push_back({names::kCoF1, pool[rest.at(0)].second});
  out.push_back({names::kCoF2, pool[rest.at(1)].second});
  return out;
}

const std::vector<NamedObstacle>& obst8_cached() {
  static const std::vector<NamedObstacle> table = obst8_catalog();
  return table;
}

std::string catalog_entry_name(const EssentialClass& cls) {
  bool all_pair = std::all_of(cls.spec.slots.begin(), cls.spec.slots.end(),
                              [](SlotType t) { return t == SlotType::Pair; });
  return std::string(all_pair ? "allpair" : "mixed") + "_" + std::to_string(cls.spec.k()) + "_" +
         cls.form.hex();
}

}  // namespace hca
