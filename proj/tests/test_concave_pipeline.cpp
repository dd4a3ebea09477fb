#include <doctest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "hca/catalog.hpp"
#include "hca/concave_round.hpp"
#include "hca/error.hpp"
#include "hca/forbidden.hpp"
#include "hca/multiples.hpp"
#include "hca/pipeline.hpp"
#include "hca/recognition.hpp"
#include "oracles.hpp"

using namespace hca;

namespace {

bool whitelisted(const std::string& name, int n) {
  auto w = pipeline_whitelist(n);
  return std::find(w.begin(), w.end(), name) != w.end();
}

}  // namespace

TEST_CASE("recognize_concave_round examples") {
  auto c5 = recognize_concave_round(cycle_graph(5));
  REQUIRE(c5);
  CHECK(is_concave_order(cycle_graph(5), *c5));
  CHECK_FALSE(recognize_concave_round(claw()));
  CHECK_FALSE(oracle::is_concave_round(claw()));
  CHECK_FALSE(recognize_concave_round(forbidden_graph(names::kCoC7Star)));
}

TEST_CASE("recognize_concave_round agrees with all circular orders for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : enumerate_all_graphs(n)) {
      auto c = recognize_concave_round(g);
      CHECK(c.has_value() == oracle::is_concave_round(g));
      if (c) CHECK(is_concave_order(g, *c));
    }
  }
}

TEST_CASE("minimal_non_concave") {
  Graph claw_k1 = with_isolated_vertex(claw());
  VertexSet s = minimal_non_concave(claw_k1);
  CHECK(s.size() == 4);
  CHECK(oracle::isomorphic(induced_subgraph(claw_k1, s).graph, claw()));

  // C4* plus a pendant path at vertex 0: the pendant makes a claw at 0.
  Graph c4s = forbidden_graph(names::kC4Star);
  Graph noisy(7);
  for (auto [u, v] : c4s.edges()) noisy.add_edge(u, v);
  noisy.add_edge(5, 0);
  noisy.add_edge(6, 5);
  VertexSet t = minimal_non_concave(noisy);
  CHECK(oracle::isomorphic(induced_subgraph(noisy, t).graph, claw()));

  // Without the pendant, C4* itself is the minimal set.
  Graph padded(6);
  for (auto [u, v] : c4s.edges()) padded.add_edge(u, v);
  padded.add_edge(5, 4);
  VertexSet r = minimal_non_concave(padded);
  CHECK(r.size() == 5);
  CHECK(oracle::isomorphic(induced_subgraph(padded, r).graph, c4s));

  fixtures::Rng rng(44);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = fixtures::random_graph(rng, 5 + trial % 4, 40);
    if (oracle::is_concave_round(g)) continue;
    VertexSet m = minimal_non_concave(g);
    CHECK_FALSE(oracle::is_concave_round(induced_subgraph(g, m).graph));
    for (int v : m.members()) {
      VertexSet rest = m;
      rest.erase(v);
      CHECK(oracle::is_concave_round(induced_subgraph(g, rest).graph));
    }
  }

  Graph co_c10 = complement(cycle_graph(10));
  CHECK(minimal_non_concave(co_c10) == co_c10.vertices());
  CHECK_THROWS_AS(minimal_non_concave(cycle_graph(5)), InputError);
}

TEST_CASE("classify_concave_forbidden") {
  FamilyTag c = classify_concave_forbidden(claw());
  CHECK(c.kind == FamilyTag::CoOddCStar);
  CHECK(c.param == 1);
  FamilyTag w = classify_concave_forbidden(wheel(5));
  CHECK(w.kind == FamilyTag::CoOddCStar);
  CHECK(w.param == 2);
  CHECK(oracle::isomorphic(wheel(5), complement(with_isolated_vertex(cycle_graph(5)))));
  FamilyTag c4 = classify_concave_forbidden(forbidden_graph(names::kC4Star));
  CHECK(c4.kind == FamilyTag::CkStar);
  CHECK(c4.param == 4);
  CHECK(classify_concave_forbidden(forbidden_graph(names::kNet)).kind == FamilyTag::Net);
  CHECK(classify_concave_forbidden(forbidden_graph(names::kTentStar)).kind == FamilyTag::TentStar);
  FamilyTag co_c8 = classify_concave_forbidden(complement(cycle_graph(8)));
  CHECK(co_c8.kind == FamilyTag::CoC2k);
  CHECK(co_c8.param == 4);
  CHECK(classify_concave_forbidden(complete_graph(3)).kind == FamilyTag::Unknown);
}

TEST_CASE("contract_true_twins") {
  TwinContraction k4 = contract_true_twins(complete_graph(4));
  CHECK(k4.graph.order() == 1);
  CHECK(k4.classes.size() == 1);
  CHECK(k4.classes[0].size() == 4);
  TwinContraction c5 = contract_true_twins(cycle_graph(5));
  CHECK(c5.graph == cycle_graph(5));
  fixtures::Rng rng(51);
  for (int t = 0; t < 40; ++t) {
    fixtures::Multiple m = fixtures::random_multiple(rng);
    TwinContraction tc = contract_true_twins(m.graph);
    CHECK(oracle::isomorphic(tc.graph, co_c7_base(m.with_w)));
    for (int v = 0; v < m.graph.order(); ++v) {
      for (int u = 0; u < m.graph.order(); ++u) {
        CHECK((tc.class_of[u] == tc.class_of[v]) == (m.base_of[u] == m.base_of[v]));
      }
    }
  }
}

TEST_CASE("multiple_partition_coC7 examples") {
  Graph base = co_c7_base(false);
  auto j = find_induced_copy(base, base);
  REQUIRE(j);
  auto out = multiple_partition_coC7(base, *j);
  REQUIRE(out.index() == 0);
  const auto& p = std::get<MultiplePartition>(out);
  for (VertexSet s : p.v) CHECK(s.size() == 1);
  CHECK(p.u.size() == 1);
  CHECK(p.w.empty());

  Graph coz = co_c7_base(true);
  auto jz = find_induced_copy(coz, base);
  REQUIRE(jz);
  auto outz = multiple_partition_coC7(coz, *jz);
  REQUIRE(outz.index() == 0);
  CHECK(std::get<MultiplePartition>(outz).w.size() == 1);
  CHECK(validate_partition(coz, std::get<MultiplePartition>(outz)));

  // x misses v_{i-2} and v_{i+2} (i = 0) but sees v_i: claw.
  Graph g(9);
  for (auto [a, b] : base.edges()) g.add_edge(a, b);
  for (int v : {0, 1, 6, 3, 4, 7}) g.add_edge(8, v);
  auto claw_out = multiple_partition_coC7(g, *j);
  REQUIRE(claw_out.index() == 1);
  CHECK(std::get<ForbiddenCopy>(claw_out).name == names::kClaw);
  CHECK(verify_copy(g, std::get<ForbiddenCopy>(claw_out)));

  CHECK_THROWS_AS(multiple_partition_coC7(cycle_graph(8), *j), InputError);
}

TEST_CASE("multiple_partition_coC7 on random multiples and flips") {
  fixtures::Rng rng(52);
  for (int t = 0; t < 60; ++t) {
    fixtures::Multiple m = fixtures::random_multiple(rng);
    auto j = find_induced_copy(m.graph, co_c7_base(false));
    REQUIRE(j);
    auto out = multiple_partition_coC7(m.graph, *j);
    REQUIRE(out.index() == 0);
    const auto& p = std::get<MultiplePartition>(out);
    CHECK(validate_partition(m.graph, p));
    CHECK(p.w.empty() != m.with_w);
  }
  int flips = 0;
  while (flips < 60) {
    auto g = fixtures::random_flip(rng);
    if (!g) continue;
    ++flips;
    auto j = find_induced_copy(*g, co_c7_base(false));
    auto out = multiple_partition_coC7(*g, *j);
    REQUIRE(out.index() == 1);
    const auto& f = std::get<ForbiddenCopy>(out);
    CHECK(verify_copy(*g, f));
    const std::vector<std::string> allowed = {names::kClaw, names::kFiveWheel, names::kC4Star, names::kCo3K2,
                                              names::kCoP7};
    CHECK(std::find(allowed.begin(), allowed.end(), f.name) != allowed.end());
  }
}

TEST_CASE("quasi_line_pipeline examples") {
  // The claw alone is an interval graph; K23 is the smallest non-HCA graph
  // the pipeline answers with a claw.
  CHECK_THROWS_AS(quasi_line_pipeline(claw()), InputError);
  PipelineResult k23 = quasi_line_pipeline(complete_bipartite(2, 3));
  CHECK(k23.forbidden.name == names::kClaw);
  PipelineResult c6 = quasi_line_pipeline(forbidden_graph(names::kCoC6));
  CHECK(c6.forbidden.name == names::kCoC6);
  CHECK_FALSE(c6.concave_round);
  Graph co2p4 = forbidden_graph(names::kCo2P4);
  CHECK(oracle::is_concave_round(co2p4));
  PipelineResult p = quasi_line_pipeline(co2p4);
  CHECK(p.concave_round);
  CHECK(p.forbidden.name == names::kCo2P4);
  CHECK(p.forbidden.vertices == co2p4.vertices());
  CHECK_THROWS_AS(quasi_line_pipeline(complete_graph(3)), InputError);
}

TEST_CASE("quasi_line_pipeline on non-HCA graphs up to 7 vertices") {
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : enumerate_all_graphs(n)) {
      if (is_hca(g)) continue;
      PipelineResult r = quasi_line_pipeline(g);
      CHECK(verify_copy(g, r.forbidden));
      CHECK(whitelisted(r.forbidden.name, n));
    }
  }
}

TEST_CASE("forbidden_profile_check") {
  CHECK(forbidden_profile_check(complete_graph(3), Profile::QuasiLineHCA).ok);
  ProfileResult net = forbidden_profile_check(forbidden_graph(names::kNet), Profile::QuasiLineHCA);
  CHECK_FALSE(net.ok);
  REQUIRE(net.witness);
  CHECK(net.witness->name == names::kNet);
  ProfileResult c6 = forbidden_profile_check(forbidden_graph(names::kCoC6), Profile::QuasiLineHCA);
  CHECK_FALSE(c6.ok);
  REQUIRE(c6.witness);
  CHECK(c6.witness->name == names::kCoC6);
  CHECK_THROWS_AS(forbidden_profile_check(complete_graph(3), Profile::ProperAndHelly), UntranscribedFigureGraph);
}
