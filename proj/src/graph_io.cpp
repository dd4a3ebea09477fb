#include "hca/graph_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "hca/error.hpp"
#include "hca/text_lines.hpp"

namespace hca {

Graph parse_graph(std::istream& in) {
  LineReader reader(in, "graph");
  std::optional<Graph> g;
  while (auto tokens = reader.next()) {
    if (!g) {
      if (tokens->size() != 2 || (*tokens)[0] != "graph") reader.fail("expected 'graph <n>'");
      g.emplace(reader.to_int((*tokens)[1]));
      continue;
    }
    if (tokens->size() != 2) reader.fail("expected 'u v'");
    int u = reader.to_int((*tokens)[0]);
    int v = reader.to_int((*tokens)[1]);
    try {
      g->add_edge(u, v);
    } catch (const InputError& e) {
      reader.fail(e.what());
    }
  }
  if (!g) throw InputError("graph: missing 'graph <n>' header");
  return *g;
}

Graph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_graph(in);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << format_graph(g);
}

}  // namespace hca
