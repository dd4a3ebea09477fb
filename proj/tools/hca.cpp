// hca: command-line front end. Exit codes: 0 answered, 1 verification
// failure, 2 input error, 3 size bound exceeded.
#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hca/arc_model.hpp"
#include "hca/catalog.hpp"
#include "hca/certificate.hpp"
#include "hca/error.hpp"
#include "hca/essentialize.hpp"
#include "hca/generator.hpp"
#include "hca/graph_io.hpp"
#include "hca/obstacle.hpp"
#include "hca/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kInput = 2, kBound = 3 };

std::optional<hca::FigureTable> figures_from(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return hca::load_figures(path);
}

int cmd_recognize(const std::string& graph_path) {
  hca::Graph g = hca::read_graph_file(graph_path);
  std::cout << hca::certificate_to_json(hca::certify_hca(g)) << "\n";
  return kOk;
}

int cmd_pipeline(const std::string& graph_path, const std::string& figure_path) {
  hca::Graph g = hca::read_graph_file(graph_path);
  auto figures = figures_from(figure_path);
  hca::PipelineResult r = hca::quasi_line_pipeline(g, figures ? &*figures : nullptr);
  hca::Certificate c;
  c.status = hca::Certificate::NotHca;
  c.forbidden = r.forbidden;
  json j = json::parse(hca::certificate_to_json(c));
  j["branch"] = r.concave_round ? "concave_round" : "not_concave_round";
  if (r.tag) j["family"] = hca::to_string(*r.tag);
  std::cout << j.dump(2) << "\n";
  return kOk;
}

int cmd_essentialize(const std::string& graph_path, const std::string& obstacle_path) {
  hca::Graph g = hca::read_graph_file(graph_path);
  hca::ObstacleEnumeration e = hca::read_obstacle_file(obstacle_path);
  if (auto v = hca::validate_enumeration(g, e); !v) throw hca::InputError("invalid enumeration: " + v.violation);
  hca::EssentializeStats stats;
  hca::EssentializeOutcome out = hca::essentialize(g, e, &stats);
  hca::Certificate c;
  c.status = hca::Certificate::NotHca;
  if (const auto* ess = std::get_if<hca::EssentialResult>(&out)) {
    c.obstacle = *ess;
  } else {
    const auto& f = std::get<hca::SmallForbidden>(out);
    c.forbidden = hca::ForbiddenCopy{f.name, f.vertices, f.copy};
  }
  json j = json::parse(hca::certificate_to_json(c));
  j["stats"] = {{"classified_edges", stats.classified_edges},
                {"inner_shrinks", stats.inner_shrinks},
                {"outer_shrinks", stats.outer_shrinks},
                {"vertex_supports", stats.vertex_supports},
                {"edge_supports", stats.edge_supports},
                {"surrounding_edges", stats.surrounding_edges}};
  std::cout << j.dump(2) << "\n";
  return kOk;
}

hca::ObstacleSpec parse_spec(const std::string& slots, const std::string& boundaries) {
  if (slots.size() != boundaries.size()) throw hca::InputError("--slots and --boundaries differ in length");
  hca::ObstacleSpec spec;
  for (char c : slots) {
    if (c != 'S' && c != 'P') throw hca::InputError("slot types are S or P");
    spec.slots.push_back(c == 'S' ? hca::SlotType::Single : hca::SlotType::Pair);
  }
  for (char c : boundaries) {
    if (c == 'M') {
      spec.boundaries.push_back(hca::Boundary::Merge);
    } else if (c == 'N') {
      spec.boundaries.push_back(hca::Boundary::NonAdjacent);
    } else if (c == 'A') {
      spec.boundaries.push_back(hca::Boundary::Adjacent);
    } else {
      throw hca::InputError("boundaries are M, N or A");
    }
  }
  return spec;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw hca::InputError("cannot write " + p.string());
  out << text;
}

int cmd_gen(const std::string& slots, const std::string& boundaries, const std::string& out_dir) {
  hca::GeneratedObstacle ob = hca::gen_obstacle(parse_spec(slots, boundaries));
  if (out_dir.empty()) {
    std::cout << hca::format_graph(ob.graph) << hca::format_obstacle(ob.enumeration);
    return kOk;
  }
  fs::create_directories(out_dir);
  write_text(fs::path(out_dir) / "obstacle.graph", hca::format_graph(ob.graph));
  write_text(fs::path(out_dir) / "obstacle.obstacle", hca::format_obstacle(ob.enumeration));
  return kOk;
}

void emit_class(const fs::path& dir, const std::string& stem, const hca::EssentialClass& c) {
  write_text(dir / (stem + ".graph"), hca::format_graph(c.obstacle.graph));
  write_text(dir / (stem + ".obstacle"), hca::format_obstacle(c.obstacle.enumeration));
}

int cmd_enumerate(int k, bool claw_free, bool obst8, const std::string& out_dir) {
  if (k != 0 && (k < hca::kMinEnumerateK || k > hca::kMaxEnumerateK)) {
    throw hca::BoundExceeded("--k must lie in 3..6");
  }
  if (obst8) {
    auto cat = hca::obst8_catalog();
    if (!out_dir.empty()) fs::create_directories(out_dir);
    for (const auto& n : cat) {
      if (!out_dir.empty()) emit_class(out_dir, n.name + "_" + std::to_string(n.cls.spec.k()), n.cls);
      std::cout << n.name << " n=" << n.cls.obstacle.graph.order() << " m=" << n.cls.obstacle.graph.edge_count()
                << " k=" << n.cls.spec.k() << " hash=" << n.cls.form.hex() << "\n";
    }
    std::cout << "classes=" << cat.size();
    if (k != 0) std::cout << " bracelets=" << hca::bracelet_count(k);
    std::cout << "\n";
    return kOk;
  }
  auto classes = hca::enumerate_essential(k, {.claw_free_only = claw_free});
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (const auto& c : classes) emit_class(out_dir, hca::catalog_entry_name(c), c);
  }
  std::cout << "classes=" << classes.size() << " bracelets=" << hca::bracelet_count(k) << "\n";
  return kOk;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  if (!in) throw hca::InputError("cannot read " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Round trips every graph/model/obstacle file and re-checks every
// certificate `x.json` against its sibling `x.graph`.
int selftest_dir(const fs::path& dir) {
  int checked = 0;
  int failed = 0;
  auto report = [&](const fs::path& p, bool ok, const std::string& why) {
    ++checked;
    if (ok) return;
    ++failed;
    std::cout << "FAIL " << p.string() << ": " << why << "\n";
  };
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    std::string ext = p.extension().string();
    if (ext == ".graph") {
      hca::Graph g = hca::read_graph_file(p.string());
      report(p, hca::parse_graph_string(hca::format_graph(g)) == g, "graph round trip");
    } else if (ext == ".model") {
      hca::ArcModel m = hca::read_model_file(p.string());
      report(p, hca::parse_model_string(hca::format_model(m)) == m, "model round trip");
    } else if (ext == ".obstacle") {
      hca::ObstacleEnumeration e = hca::read_obstacle_file(p.string());
      report(p, hca::parse_obstacle_string(hca::format_obstacle(e)) == e, "obstacle round trip");
    } else if (ext == ".json") {
      fs::path graph = p;
      graph.replace_extension(".graph");
      if (!fs::exists(graph)) {
        report(p, false, "no sibling .graph file");
        continue;
      }
      hca::Certificate c = hca::certificate_from_json(slurp(p));
      std::string why;
      bool ok = hca::check_certificate(hca::read_graph_file(graph.string()), c, &why);
      report(p, ok, why);
    }
  }
  std::cout << "checked=" << checked << " failed=" << failed << "\n";
  return failed == 0 ? kOk : kFailed;
}

int selftest_builtin() {
  int failed = 0;
  for (const char* name : {"Cn", "C4Star", "Co3K2", "Net", "Co2P4", "CoC7Star"}) {
    hca::NamedGraph ng{name, std::string(name) == "Cn" ? std::vector<int>{5} : std::vector<int>{}};
    hca::Graph g = hca::catalog_graph(ng);
    hca::Certificate c = hca::certify_hca(g);
    hca::Certificate back = hca::certificate_from_json(hca::certificate_to_json(c));
    std::string why;
    bool ok = hca::check_certificate(g, back, &why);
    std::cout << (ok ? "PASS " : "FAIL ") << name << (ok ? "" : ": " + why) << "\n";
    failed += ok ? 0 : 1;
  }
  return failed == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Helly circular-arc graphs: recognition with certificates"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string obstacle_path;
  std::string figure_path;
  std::string out_dir;
  std::string dir;
  std::string slots;
  std::string boundaries;
  int k = 0;
  bool claw_free = false;
  bool obst8 = false;

  auto* recognize = app.add_subcommand("recognize", "certify whether a graph is HCA");
  recognize->add_option("graph", graph_path)->required();

  auto* pipeline = app.add_subcommand("pipeline", "claw / 5-wheel / HCA forbidden subgraph for a non-HCA graph");
  pipeline->add_option("graph", graph_path)->required();
  pipeline->add_option("--figures", figure_path, "figure transcription file");

  auto* essentialize = app.add_subcommand("essentialize", "shrink an obstacle enumeration to an essential one");
  essentialize->add_option("graph", graph_path)->required();
  essentialize->add_option("obstacle", obstacle_path)->required();

  auto* gen = app.add_subcommand("gen", "build one obstacle from slot types and boundaries");
  gen->add_option("--slots", slots, "per slot S (single) or P (pair)")->required();
  gen->add_option("--boundaries", boundaries, "per boundary M (merge), N (non-adjacent), A (adjacent)")->required();
  gen->add_option("--out", out_dir);

  auto* enumerate = app.add_subcommand("enumerate", "essential obstacles with core length k");
  auto* k_opt = enumerate->add_option("--k", k);
  auto* cf_opt = enumerate->add_flag("--claw-free", claw_free);
  auto* o8_opt = enumerate->add_flag("--obst8", obst8);
  cf_opt->excludes(o8_opt);
  enumerate->add_option("--out", out_dir, "directory for one .graph and .obstacle file per class");

  auto* selftest = app.add_subcommand("selftest", "re-verify emitted files, or run built-in checks");
  selftest->add_option("dir", dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    if (*recognize) return cmd_recognize(graph_path);
    if (*pipeline) return cmd_pipeline(graph_path, figure_path);
    if (*essentialize) return cmd_essentialize(graph_path, obstacle_path);
    if (*gen) return cmd_gen(slots, boundaries, out_dir);
    if (*enumerate) {
      if (!obst8 && !*k_opt) throw hca::InputError("enumerate needs --k or --obst8");
      return cmd_enumerate(k, claw_free, obst8, out_dir);
    }
    if (*selftest) return dir.empty() ? selftest_builtin() : selftest_dir(dir);
  } catch (const hca::BoundExceeded& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return kBound;
  } catch (const hca::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const hca::UntranscribedFigureGraph& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kOk;
}
