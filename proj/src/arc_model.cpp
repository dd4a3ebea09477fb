#include "hca/arc_model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hca/error.hpp"
#include "hca/text_lines.hpp"

namespace hca {

void check_model(const ArcModel& m) {
  if (m.circle_size < 1) throw InputError("circle size must be positive");
  if (m.size() > kMaxVertices) throw InputError("more than 64 arcs");
  for (int i = 0; i < m.size(); ++i) {
    const Arc& a = m.arcs[i];
    if (a.full) continue;
    if (a.start < 0 || a.start >= m.circle_size || a.end < 0 || a.end >= m.circle_size) {
      throw InputError("arc " + std::to_string(i) + " has an endpoint outside the circle");
    }
  }
}

bool arc_contains(const ArcModel& m, int arc, int position) {
  const Arc& a = m.arcs[arc];
  if (a.full) return true;
  if (a.start <= a.end) return a.start <= position && position <= a.end;
  return position >= a.start || position <= a.end;
}

std::vector<VertexSet> position_cover(const ArcModel& m) {
  check_model(m);
  std::vector<VertexSet> cover(m.circle_size);
  for (int i = 0; i < m.size(); ++i) {
    const Arc& a = m.arcs[i];
    if (a.full) {
      for (auto& c : cover) c.insert(i);
      continue;
    }
    for (int p = a.start;; p = (p + 1) % m.circle_size) {
      cover[p].insert(i);
      if (p == a.end) break;
    }
  }
  return cover;
}

Graph intersection_graph(const ArcModel& m) {
  auto cover = position_cover(m);
  Graph g(m.size());
  for (VertexSet c : cover) {
    for (int u : c) {
      for (int v : c) {
        if (u < v) g.add_edge(u, v);
      }
    }
  }
  return g;
}

HellyReport helly_report(const ArcModel& m) {
  auto cover = position_cover(m);
  Graph g = intersection_graph(m);
  HellyReport r;
  r.cliques = maximal_cliques(g);
  for (VertexSet q : r.cliques) {
    std::optional<int> point;
    for (int p = 0; p < m.circle_size; ++p) {
      if (q.subset_of(cover[p])) {
        point = p;
        break;
      }
    }
    r.clique_points.push_back(point);
    if (!point && !r.violator) {
      r.is_helly = false;
      r.violator = q;
    }
  }
  return r;
}

bool is_proper(const ArcModel& m) {
  auto cover = position_cover(m);
  for (int a = 0; a < m.size(); ++a) {
    // Arcs containing every position of a, then check for a strict superset.
    VertexSet supersets = VertexSet::range(m.size());
    for (VertexSet c : cover) {
      if (c.contains(a)) supersets &= c;
    }
    for (int b : supersets - VertexSet::single(a)) {
      bool equal = std::all_of(cover.begin(), cover.end(),
                               [&](VertexSet c) { return c.contains(a) == c.contains(b); });
      if (!equal) return false;
    }
  }
  return true;
}

ArcModel normalize_extremes(const ArcModel& m) {
  check_model(m);
  for (const Arc& a : m.arcs) {
    if (a.full) throw InputError("normalize_extremes: full-circle arc present");
  }
  int n = m.size();
  ArcModel out;
  out.circle_size = std::max(1, 2 * n);
  out.arcs.resize(n);
  int slot = 0;
  for (int p = 0; p < m.circle_size; ++p) {
    for (int i = 0; i < n; ++i) {
      if (m.arcs[i].start == p) out.arcs[i].start = slot++;
    }
    for (int i = 0; i < n; ++i) {
      if (m.arcs[i].end == p) out.arcs[i].end = slot++;
    }
  }
  return out;
}

ArcModel submodel(const ArcModel& m, VertexSet s) {
  if (!s.subset_of(VertexSet::range(m.size()))) {
    throw InputError("submodel: id set " + to_string(s) + " out of range");
  }
  ArcModel out;
  out.circle_size = m.circle_size;
  for (int v : s) out.arcs.push_back(m.arcs[v]);
  return out;
}

ArcModel parse_model(std::istream& in) {
  LineReader reader(in, "model");
  auto header = reader.next();
  if (!header || header->size() != 3 || (*header)[0] != "model") {
    reader.fail("expected 'model <P> <n>'");
  }
  ArcModel m;
  m.circle_size = reader.to_int((*header)[1]);
  int n = reader.to_int((*header)[2]);
  if (m.circle_size < 1) reader.fail("circle size must be positive");
  if (n < 0 || n > kMaxVertices) reader.fail("arc count outside 0..64");
  m.arcs.resize(n);
  std::vector<bool> seen(n, false);
  while (auto t = reader.next()) {
    const auto& tok = *t;
    bool is_arc = tok[0] == "arc" && tok.size() == 4;
    bool is_full = tok[0] == "full" && tok.size() == 2;
    if (!is_arc && !is_full) reader.fail("expected 'arc <id> <start> <end>' or 'full <id>'");
    int id = reader.to_int(tok[1]);
    if (id < 0 || id >= n) reader.fail("arc id out of range");
    if (seen[id]) reader.fail("arc " + std::to_string(id) + " given twice");
    seen[id] = true;
    if (is_full) {
      m.arcs[id].full = true;
    } else {
      m.arcs[id].start = reader.to_int(tok[2]);
      m.arcs[id].end = reader.to_int(tok[3]);
      if (m.arcs[id].start < 0 || m.arcs[id].start >= m.circle_size || m.arcs[id].end < 0 ||
          m.arcs[id].end >= m.circle_size) {
        reader.fail("endpoint outside the circle");
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!seen[i]) throw InputError("model: arc " + std::to_string(i) + " missing");
  }
  return m;
}

ArcModel parse_model_string(const std::string& text) {
  std::istringstream in(text);
  return parse_model(in);
}

ArcModel read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_model(in);
}

std::string format_model(const ArcModel& m) {
  std::ostringstream out;
  out << "model " << m.circle_size << ' ' << m.size() << '\n';
  for (int i = 0; i < m.size(); ++i) {
    const Arc& a = m.arcs[i];
    if (a.full) {
      out << "full " << i << '\n';
    } else {
      out << "arc " << i << ' ' << a.start << ' ' << a.end << '\n';
    }
  }
  return out.str();
}

}  // namespace hca
