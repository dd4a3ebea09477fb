#include "hca/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hca/error.hpp"
#include "hca/isomorphism.hpp"

namespace hca {

Graph claw() { return complete_bipartite(1, 3); }

Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph wheel(int k) { return with_universal_vertex(cycle_graph(k)); }

Graph complete_graph(int n) { return complement(Graph(n)); }

Graph complete_bipartite(int p, int q) {
  if (p < 0 || q < 0) throw InputError("negative part size");
  Graph g(p + q);
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < q; ++b) g.add_edge(a, p + b);
  }
  return g;
}

Graph complete_sun(int k) {
  if (k < 3) throw InputError("complete sun needs k >= 3");
  Graph g(2 * k);
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) g.add_edge(a, b);
  }
  for (int i = 0; i < k; ++i) {
    g.add_edge(k + i, i);
    g.add_edge(k + i, (i + k - 1) % k);
  }
  return g;
}

Graph pseudo_domino(int handles) {
  enum { a1, a2, b1, b2, c1, c2 };
  Graph g = build_graph(6, {{a1, a2}, {b1, b2}, {c1, c2}, {a1, b1}, {a2, b2}, {b1, c1}, {b2, c2}});
  if (handles >= 1) g.add_edge(a1, c1);
  if (handles >= 2) g.add_edge(a2, c2);
  return g;
}

Graph co_c7_base(bool with_w) {
  Graph g(with_w ? 9 : 8);
  for (int i = 0; i < 7; ++i) {
    g.add_edge(i, (i + 1) % 7);
    g.add_edge(i, (i + 2) % 7);
    g.add_edge(7, i);
  }
  if (with_w) {
    // j = 1 (vertex 0): W sees V_{j±2}, V_{j±3}.
    for (int d : {2, 3, 4, 5}) g.add_edge(8, d);
  }
  return g;
}

std::string ck_star_name(int k) { return "C" + std::to_string(k) + "*"; }

namespace {

int param(const NamedGraph& ng, std::size_t i) {
  if (ng.params.size() <= i) throw InputError(ng.name + ": missing parameter");
  return ng.params[i];
}

}  // namespace

Graph catalog_graph(const NamedGraph& ng, const FigureTable* figures) {
  const std::string& s = ng.name;
  if (s == "Claw") return claw();
  if (s == "Wheel") return wheel(param(ng, 0));
  if (s == "Pn") return path_graph(param(ng, 0));
  if (s == "Cn") return cycle_graph(param(ng, 0));
  if (s == "Kn") return complete_graph(param(ng, 0));
  if (s == "Kpq") return complete_bipartite(param(ng, 0), param(ng, 1));
  if (s == "CompleteSun") return complete_sun(param(ng, 0));
  if (s == "Domino") return pseudo_domino(0);
  if (s == "G3") return pseudo_domino(1);
  if (s == "CoC6") return pseudo_domino(2);
  if (s == "CoC5plusK2") return complement(disjoint_union(cycle_graph(5), complete_graph(2)));
  if (s == "CoZ") return co_c7_base(true);
  if (s == "CoC7Star") return co_c7_base(false);
  if (s == "Net") return complement(complete_sun(3));
  if (s == "Tent") return complete_sun(3);
  if (s == "TentStar") return with_isolated_vertex(complete_sun(3));
  if (s == "C4Star") return with_isolated_vertex(cycle_graph(4));
  if (s == "K23") return complete_bipartite(2, 3);
  if (s == "Co3K2") {
    return complement(build_graph(6, {{0, 1}, {2, 3}, {4, 5}}));
  }
  if (s == "CoP7") return complement(path_graph(7));
  if (s == "Co2P4") return complement(disjoint_union(path_graph(4), path_graph(4)));
  if (s == "Co2C5") return complement(disjoint_union(cycle_graph(5), cycle_graph(5)));
  if (s == "CkStar") return with_isolated_vertex(cycle_graph(param(ng, 0)));
  if (s == "CoCn") return complement(cycle_graph(param(ng, 0)));
  if (s == "CoOddCStar") {
    int k = param(ng, 0);
    if (k < 1) throw InputError("CoOddCStar needs k >= 1");
    return complement(with_isolated_vertex(cycle_graph(2 * k + 1)));
  }
  if (figures) {
    auto it = figures->find(s);
    if (it != figures->end()) return it->second;
  }
  throw UntranscribedFigureGraph("graph '" + s + "' exists only as a figure and no transcription is loaded");
}

FigureTable load_figures(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open figure file " + path);
  FigureTable table;
  std::string line;
  std::string current;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto fail = [&](const std::string& what) {
      throw InputError(path + ":" + std::to_string(lineno) + ": " + what);
    };
    if (head == "figure") {
      int n = 0;
      if (!(ls >> current >> n)) fail("expected 'figure <name> <n>'");
      table.insert_or_assign(current, Graph(n));
      continue;
    }
    if (current.empty()) fail("edge before any figure header");
    int u = 0;
    int v = 0;
    std::istringstream es(line);
    if (!(es >> u >> v)) fail("expected 'u v'");
    table.at(current).add_edge(u, v);
  }
  return table;
}

std::vector<Graph> enumerate_all_graphs(int n) {
  if (n < 0) throw InputError("negative vertex count");
  if (n > 7) throw BoundExceeded("graph enumeration is limited to n <= 7");
  std::set<CanonicalForm> level{canonical_form(Graph(0))};
  for (int m = 1; m <= n; ++m) {
    std::set<CanonicalForm> next;
    for (const auto& f : level) {
      Graph base = graph_from_canonical(f);
      for (Bits nb = 0; nb < (Bits{1} << (m - 1)); ++nb) {
        Graph g = with_isolated_vertex(base);
        for (int u : VertexSet(nb)) g.add_edge(u, m - 1);
        next.insert(canonical_form(g));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (const auto& f : level) out.push_back(graph_from_canonical(f));
  return out;
}

}  // namespace hca
