#include "hca/forbidden.hpp"

#include <charconv>
#include <map>

#include "hca/catalog.hpp"
#include "hca/error.hpp"
#include "hca/generator.hpp"

namespace hca {

namespace {

const std::map<std::string, Graph>& obst8_graphs() {
  static const std::map<std::string, Graph> table = [] {
    std::map<std::string, Graph> t;
    for (const auto& n : obst8_cached()) t.emplace(n.name, n.cls.obstacle.graph);
    return t;
  }();
  return table;
}

// Parses the integer in name[from, name.size() - drop).
std::optional<int> number_in(const std::string& name, std::size_t from, std::size_t drop) {
  if (name.size() <= from + drop) return std::nullopt;
  int value = 0;
  const char* b = name.data() + from;
  const char* e = name.data() + name.size() - drop;
  auto [p, ec] = std::from_chars(b, e, value);
  if (ec != std::errc{} || p != e) return std::nullopt;
  return value;
}

}  // namespace

Graph forbidden_graph(const std::string& name) {
  static const std::map<std::string, NamedGraph> fixed = {
      {names::kClaw, {"Claw", {}}},         {names::kFiveWheel, {"Wheel", {5}}},
      {names::kC4Star, {"C4Star", {}}},     {names::kK23, {"K23", {}}},
      {names::kDomino, {"Domino", {}}},     {names::kG3, {"G3", {}}},
      {names::kCoC6, {"CoC6", {}}},         {names::kCoC5K2, {"CoC5plusK2", {}}},
      {names::kCo3K2, {"Co3K2", {}}},       {names::kCoP7, {"CoP7", {}}},
      {names::kNet, {"Net", {}}},           {names::kCo2P4, {"Co2P4", {}}},
      {names::kTentStar, {"TentStar", {}}}, {names::kCoC7Star, {"CoC7Star", {}}},
      {"co-Z", {"CoZ", {}}},
  };
  if (auto it = fixed.find(name); it != fixed.end()) return catalog_graph(it->second);
  if (auto it = obst8_graphs().find(name); it != obst8_graphs().end()) return it->second;
  bool star = !name.empty() && name.back() == '*';
  if (name.starts_with("co-C")) {
    auto k = number_in(name, 4, star ? 1 : 0);
    if (k && *k >= 3 && *k <= 63) {
      Graph c = cycle_graph(*k);
      return complement(star ? with_isolated_vertex(c) : c);
    }
  } else if (name.starts_with("C") && star) {
    auto k = number_in(name, 1, 1);
    if (k && *k >= 3 && *k <= 63) return with_isolated_vertex(cycle_graph(*k));
  }
  throw InputError("unknown forbidden graph name: " + name);
}

bool verify_copy(const Graph& host, const ForbiddenCopy& f) {
  Graph pattern = forbidden_graph(f.name);
  return is_induced_copy(host, pattern, f.copy) && f.copy.image() == f.vertices;
}

std::optional<ForbiddenCopy> copy_on(const Graph& host, VertexSet s, const std::string& name) {
  auto m = induced_copy_on(host, s, forbidden_graph(name));
  if (!m) return std::nullopt;
  return ForbiddenCopy{name, s, *m};
}

std::optional<ForbiddenCopy> find_first_copy(const Graph& host, VertexSet within,
                                             const std::vector<std::string>& names) {
  for (const auto& name : names) {
    if (auto m = find_induced_copy_within(host, within, forbidden_graph(name))) {
      return ForbiddenCopy{name, m->image(), *m};
    }
  }
  return std::nullopt;
}

}  // namespace hca
