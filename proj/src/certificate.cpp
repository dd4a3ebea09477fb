#include "hca/certificate.hpp"

#include <json.hpp>

#include "hca/catalog.hpp"
#include "hca/error.hpp"
#include "hca/recognition.hpp"

namespace hca {

using nlohmann::json;

std::string checker_name(const Certificate& c) {
  if (c.model) return "helly_report+intersection_graph";
  if (c.obstacle) return "validate_enumeration+is_essential";
  if (c.forbidden && c.forbidden->name == "unnamed") return "minimal_non_hca";
  if (c.forbidden) return "induced_copy";
  return "none";
}

bool check_certificate(const Graph& g, const Certificate& c, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (c.status == Certificate::Helly) {
    if (!c.model) return fail("helly status without a model");
    check_model(*c.model);
    if (!(intersection_graph(*c.model) == g)) return fail("model does not represent the graph");
    if (!helly_report(*c.model).is_helly) return fail("model is not Helly");
    return true;
  }
  if (c.model) return fail("not_hca status with a model");
  if (c.obstacle) {
    const auto& o = *c.obstacle;
    if (!o.vertices.subset_of(g.vertices())) return fail("obstacle vertices out of range");
    if (!validate_enumeration(g, o.enumeration)) return fail("enumeration is invalid");
    if (o.enumeration.vertices() != o.vertices) return fail("enumeration does not cover its vertex set");
    if (!is_essential(g, o.enumeration)) return fail("enumeration is not essential");
    return true;
  }
  if (!c.forbidden) return fail("not_hca status without evidence");
  const auto& f = *c.forbidden;
  if (!f.vertices.subset_of(g.vertices())) return fail("forbidden vertices out of range");
  if (f.name == "unnamed") {
    Graph h = induced_subgraph(g, f.vertices).graph;
    if (is_hca(h)) return fail("unnamed subgraph is HCA");
    for (int v = 0; v < h.order(); ++v) {
      if (!is_hca(delete_vertex(h, v).graph)) return fail("unnamed subgraph is not minimal");
    }
    return true;
  }
  if (!verify_copy(g, f)) return fail("not an induced copy of " + f.name);
  return true;
}

namespace {

const std::vector<std::string> kNamedMinimal = {
    names::kC4Star, names::kK23, names::kDomino, names::kG3, names::kCoC6, names::kCoC5K2,
    names::kTentStar, names::kCo3K2, names::kCoP7, names::kNet, names::kCo2P4, names::kCoF1,
    names::kCoF2, names::kCoH3, names::kCoF8};

std::optional<ForbiddenCopy> name_minimal(const InducedSubgraph& h) {
  std::vector<std::string> candidates = kNamedMinimal;
  if (h.graph.order() >= 5) candidates.push_back(ck_star_name(h.graph.order() - 1));
  for (const auto& name : candidates) {
    Graph pattern = forbidden_graph(name);
    if (pattern.order() != h.graph.order()) continue;
    if (auto m = isomorphic(h.graph, pattern)) {
      ForbiddenCopy f{name, {}, {}};
      for (int v : m->map) f.copy.map.push_back(h.to_parent[v]);
      f.vertices = f.copy.image();
      return f;
    }
  }
  return std::nullopt;
}

}  // namespace

Certificate certify_hca(const Graph& g) {
  Certificate c;
  if (auto m = recognize_hca(g)) {
    c.model = std::move(*m);
  } else {
    c.status = Certificate::NotHca;
    InducedSubgraph h = induced_subgraph(g, minimal_non_hca(g));
    std::optional<ObstacleEnumeration> e;
    if (h.graph.order() <= kMaxObstacleSearch) e = find_obstacle_enumeration(h.graph);
    if (e) {
      EssentializeOutcome out = essentialize(h.graph, *e);
      if (const auto* ess = std::get_if<EssentialResult>(&out)) {
        VertexSet vs;
        for (int v : ess->vertices) vs.insert(h.to_parent[v]);
        c.obstacle = EssentialResult{ess->enumeration.relabeled(h.to_parent), vs};
      } else {
        const auto& f = std::get<SmallForbidden>(out);
        ForbiddenCopy lifted{f.name, {}, {}};
        for (int v : f.copy.map) lifted.copy.map.push_back(h.to_parent[v]);
        lifted.vertices = lifted.copy.image();
        c.forbidden = lifted;
      }
    } else if (auto f = name_minimal(h)) {
      c.forbidden = *f;
    } else {
      VertexSet vs;
      for (int v : h.to_parent) vs.insert(v);
      c.forbidden = ForbiddenCopy{"unnamed", vs, {}};
    }
  }
  std::string why;
  if (!check_certificate(g, c, &why)) throw InternalError("certificate fails its own check: " + why);
  return c;
}

namespace {

json arc_model_json(const ArcModel& m) {
  json arcs = json::array();
  for (std::size_t i = 0; i < m.arcs.size(); ++i) {
    arcs.push_back({{"id", i}, {"start", m.arcs[i].start}, {"end", m.arcs[i].end}, {"full", m.arcs[i].full}});
  }
  return {{"circle_size", m.circle_size}, {"arcs", arcs}};
}

ArcModel arc_model_from(const json& j) {
  ArcModel m;
  m.circle_size = j.at("circle_size").get<int>();
  const json& arcs = j.at("arcs");
  m.arcs.resize(arcs.size());
  for (const json& a : arcs) {
    auto id = a.at("id").get<std::size_t>();
    if (id >= m.arcs.size()) throw InputError("arc id out of range");
    m.arcs[id] = {a.at("start").get<int>(), a.at("end").get<int>(), a.value("full", false)};
  }
  check_model(m);
  return m;
}

json members(VertexSet s) { return s.members(); }

VertexSet set_from(const json& j) {
  VertexSet s;
  for (int v : j.get<std::vector<int>>()) {
    if (v < 0 || v >= kMaxVertices) throw InputError("vertex id out of range");
    s.insert(v);
  }
  return s;
}

json obstacle_json(const EssentialResult& r) {
  json wit = json::array();
  const auto& e = r.enumeration;
  for (int i = 0; i < e.k(); ++i) {
    const WitnessSlot& s = e.slots[i];
    if (s.pair) {
      wit.push_back({{"slot", i + 1}, {"kind", "pair"}, {"u", s.u}, {"z", s.z}});
    } else {
      wit.push_back({{"slot", i + 1}, {"kind", "single"}, {"w", s.u}});
    }
  }
  return {{"k", e.k()}, {"core", e.core}, {"witnesses", wit}, {"vertices", members(r.vertices)}};
}

EssentialResult obstacle_from(const json& j) {
  EssentialResult r;
  r.enumeration.core = j.at("core").get<std::vector<int>>();
  int k = r.enumeration.k();
  r.enumeration.slots.assign(k, {});
  std::vector<bool> seen(k, false);
  for (const json& w : j.at("witnesses")) {
    int slot = w.at("slot").get<int>() - 1;
    if (slot < 0 || slot >= k || seen[slot]) throw InputError("bad witness slot");
    seen[slot] = true;
    std::string kind = w.at("kind").get<std::string>();
    if (kind == "pair") {
      r.enumeration.slots[slot] = WitnessSlot::make_pair(w.at("u").get<int>(), w.at("z").get<int>());
    } else if (kind == "single") {
      r.enumeration.slots[slot] = WitnessSlot::single(w.at("w").get<int>());
    } else {
      throw InputError("bad witness kind: " + kind);
    }
  }
  for (bool s : seen) {
    if (!s) throw InputError("missing witness slot");
  }
  r.vertices = set_from(j.at("vertices"));
  return r;
}

}  // namespace

std::string certificate_to_json(const Certificate& c, int indent) {
  json j;
  j["status"] = c.status == Certificate::Helly ? "helly" : "not_hca";
  j["checker"] = checker_name(c);
  if (c.model) j["model"] = arc_model_json(*c.model);
  if (c.forbidden) {
    j["forbidden"] = {{"name", c.forbidden->name}, {"vertices", members(c.forbidden->vertices)}};
    if (!c.forbidden->copy.map.empty()) j["forbidden"]["map"] = c.forbidden->copy.map;
  }
  if (c.obstacle) j["obstacle"] = obstacle_json(*c.obstacle);
  return j.dump(indent);
}

Certificate certificate_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    Certificate c;
    std::string status = j.at("status").get<std::string>();
    if (status == "helly") {
      c.status = Certificate::Helly;
    } else if (status == "not_hca") {
      c.status = Certificate::NotHca;
    } else {
      throw InputError("unknown status: " + status);
    }
    if (j.contains("model")) c.model = arc_model_from(j["model"]);
    if (j.contains("forbidden")) {
      const json& f = j["forbidden"];
      ForbiddenCopy fc{f.at("name").get<std::string>(), set_from(f.at("vertices")), {}};
      if (f.contains("map")) fc.copy.map = f["map"].get<std::vector<int>>();
      c.forbidden = fc;
    }
    if (j.contains("obstacle")) c.obstacle = obstacle_from(j["obstacle"]);
    return c;
  } catch (const json::exception& e) {
    throw InputError(std::string("certificate JSON: ") + e.what());
  }
}

}  // namespace hca
