#include "hca/pipeline.hpp"

#include <variant>

#include "hca/concave_round.hpp"
#include "hca/error.hpp"
#include "hca/essentialize.hpp"
#include "hca/generator.hpp"
#include "hca/multiples.hpp"
#include "hca/recognition.hpp"

namespace hca {

std::string to_string(const FamilyTag& t) {
  switch (t.kind) {
    case FamilyTag::Net: return "net";
    case FamilyTag::TentStar: return "tent*";
    case FamilyTag::CoH3: return "co-H3";
    case FamilyTag::CkStar: return ck_star_name(t.param);
    case FamilyTag::CoC2k: return "co-C" + std::to_string(2 * t.param);
    case FamilyTag::CoOddCStar: return "co-C" + std::to_string(2 * t.param + 1) + "*";
    case FamilyTag::CoB: return "co-" + t.figure;
    case FamilyTag::Unknown: return "unknown";
  }
  return "unknown";
}

FamilyTag classify_concave_forbidden(const Graph& h, const FigureTable* figures) {
  int n = h.order();
  auto iso = [&](const Graph& c) { return c.order() == n && isomorphic(h, c).has_value(); };
  if (iso(forbidden_graph(names::kNet))) return {FamilyTag::Net, 0, {}};
  if (iso(forbidden_graph(names::kTentStar))) return {FamilyTag::TentStar, 0, {}};
  if (iso(forbidden_graph(names::kCoH3))) return {FamilyTag::CoH3, 0, {}};
  if (n >= 5 && iso(with_isolated_vertex(cycle_graph(n - 1)))) return {FamilyTag::CkStar, n - 1, {}};
  if (n >= 6 && n % 2 == 0 && iso(complement(cycle_graph(n)))) return {FamilyTag::CoC2k, n / 2, {}};
  if (n >= 4 && n % 2 == 0 && iso(complement(with_isolated_vertex(cycle_graph(n - 1))))) {
    return {FamilyTag::CoOddCStar, (n - 2) / 2, {}};
  }
  if (figures) {
    for (const auto& [name, g] : *figures) {
      if (name.starts_with("B") && iso(complement(g))) return {FamilyTag::CoB, 0, name};
    }
  }
  return {};
}

std::vector<std::string> pipeline_whitelist(int n) {
  std::vector<std::string> out = {names::kClaw,  names::kFiveWheel, names::kCo3K2, names::kCoP7,
                                  names::kCoF1,  names::kCoF2,      names::kCoH3,  names::kNet,
                                  names::kCo2P4, names::kCoF8,      names::kCoC6,  names::kTentStar};
  for (int k = 4; k <= n - 1; ++k) out.push_back(ck_star_name(k));
  return out;
}

namespace {

ForbiddenCopy lift(const ForbiddenCopy& f, const InducedSubgraph& sub) {
  ForbiddenCopy out{f.name, {}, {}};
  for (int v : f.copy.map) out.copy.map.push_back(sub.to_parent[v]);
  out.vertices = out.copy.image();
  return out;
}

ForbiddenCopy named_whole(const InducedSubgraph& sub, const std::string& name) {
  auto c = copy_on(sub.graph, sub.graph.vertices(), name);
  if (!c) throw InternalError("pipeline: subgraph is not " + name);
  return lift(*c, sub);
}

ForbiddenCopy search_inside(const InducedSubgraph& sub, const std::vector<std::string>& names) {
  auto c = find_first_copy(sub.graph, sub.graph.vertices(), names);
  if (!c) throw InternalError("pipeline: expected induced subgraph not found");
  return lift(*c, sub);
}

ForbiddenCopy concave_branch(const Graph& g) {
  InducedSubgraph h = induced_subgraph(g, minimal_non_hca(g));
  auto e = find_obstacle_enumeration(h.graph);
  if (!e) throw InternalError("pipeline: minimal non-HCA subgraph of a concave-round graph has no obstacle enumeration");
  EssentializeOutcome out = essentialize(h.graph, *e);
  if (const auto* f = std::get_if<SmallForbidden>(&out)) {
    return lift(ForbiddenCopy{f->name, f->vertices, f->copy}, h);
  }
  const auto& ess = std::get<EssentialResult>(out);
  InducedSubgraph core = induced_subgraph(h.graph, ess.vertices);
  for (const auto& n : obst8_cached()) {
    if (auto m = isomorphic(core.graph, forbidden_graph(n.name))) {
      ForbiddenCopy inner{n.name, {}, {}};
      for (int v : m->map) inner.copy.map.push_back(core.to_parent[v]);
      inner.vertices = inner.copy.image();
      return lift(inner, h);
    }
  }
  throw InternalError("pipeline: essential obstacle of a concave-round graph is not in OBST8");
}

ForbiddenCopy non_concave_branch(const Graph& g, const FigureTable* figures, FamilyTag& tag) {
  InducedSubgraph j = induced_subgraph(g, minimal_non_concave(g));
  tag = classify_concave_forbidden(j.graph, figures);
  switch (tag.kind) {
    case FamilyTag::Net: return named_whole(j, names::kNet);
    case FamilyTag::TentStar: return named_whole(j, names::kTentStar);
    case FamilyTag::CoH3: return named_whole(j, names::kCoH3);
    case FamilyTag::CkStar: return named_whole(j, ck_star_name(tag.param));
    case FamilyTag::CoC2k:
      if (tag.param == 3) return named_whole(j, names::kCoC6);
      return search_inside(j, {names::kCoP7});
    case FamilyTag::CoOddCStar:
      if (tag.param == 1) return named_whole(j, names::kClaw);
      if (tag.param == 2) return named_whole(j, names::kFiveWheel);
      if (tag.param >= 4) return search_inside(j, {names::kCoP7});
      break;
    case FamilyTag::CoB:
    case FamilyTag::Unknown: return search_inside(j, {names::kCoP7, names::kCo3K2});
  }
  // co-C7*: the multiples lemma on all of G.
  auto m = isomorphic(j.graph, co_c7_base(false));
  if (!m) throw InternalError("pipeline: co-C7* tag without isomorphism");
  IsoMapping in_g;
  for (int v : m->map) in_g.map.push_back(j.to_parent[v]);
  MultiplesOutcome out = multiple_partition_coC7(g, in_g);
  if (const auto* f = std::get_if<ForbiddenCopy>(&out)) return *f;
  throw InternalError("pipeline: non-HCA input is a multiple of co-C7* or co-Z");
}

}  // namespace

PipelineResult quasi_line_pipeline(const Graph& g, const FigureTable* figures) {
  if (is_hca(g)) throw InputError("pipeline: input is HCA, nothing to certify");
  PipelineResult r;
  r.concave_round = is_concave_round(g);
  if (r.concave_round) {
    r.forbidden = concave_branch(g);
  } else {
    FamilyTag tag;
    r.forbidden = non_concave_branch(g, figures, tag);
    r.tag = tag;
  }
  if (!verify_copy(g, r.forbidden)) throw InternalError("pipeline: output copy fails verification");
  return r;
}

std::vector<std::string> profile_names(Profile p, int n) {
  std::vector<std::string> out = {names::kClaw,  names::kFiveWheel, names::kCoC7Star, names::kCo3K2,
                                  names::kCoP7,  names::kCoF1,      names::kCoF2,     names::kCoH3,
                                  names::kNet,   names::kCo2P4,     names::kCoF8,     names::kCoC6,
                                  names::kTentStar};
  if (p == Profile::ProperAndHelly) {
    out.push_back("co-H2");
    out.push_back("co-H4");
  }
  for (int k = 4; k <= n - 1; ++k) out.push_back(ck_star_name(k));
  return out;
}

ProfileResult forbidden_profile_check(const Graph& g, Profile p, const FigureTable* figures) {
  std::vector<std::pair<std::string, Graph>> patterns;
  for (const auto& name : profile_names(p, g.order())) {
    if (name == "co-H2" || name == "co-H4") {
      patterns.emplace_back(name, complement(catalog_graph({name.substr(3), {}}, figures)));
    } else {
      patterns.emplace_back(name, forbidden_graph(name));
    }
  }
  for (const auto& [name, pattern] : patterns) {
    if (pattern.order() > g.order()) continue;
    if (auto m = find_induced_copy(g, pattern)) return {false, ForbiddenCopy{name, m->image(), *m}};
  }
  return {};
}

}  // namespace hca
