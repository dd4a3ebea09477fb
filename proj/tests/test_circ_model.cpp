#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "hca/arc_model.hpp"
#include "hca/catalog.hpp"
#include "hca/circular_ones.hpp"
#include "hca/error.hpp"
#include "hca/isomorphism.hpp"
#include "oracles.hpp"

using namespace hca;

namespace {

ArcModel model(int p, std::vector<Arc> arcs) { return ArcModel{p, std::move(arcs)}; }

const ArcModel kTriangleCover = model(6, {{0, 2}, {2, 4}, {4, 0}});

}  // namespace

TEST_CASE("intersection_graph") {
  CHECK(intersection_graph(kTriangleCover) == complete_graph(3));
  CHECK(intersection_graph(model(8, {{0, 1}, {3, 4}})).edge_count() == 0);
  ArcModel p4 = model(8, {{0, 2}, {2, 4}, {4, 6}, {6, 7}});
  CHECK(intersection_graph(p4) == path_graph(4));
  fixtures::Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    ArcModel m = fixtures::random_model(rng, 1 + t % 9, 1 + t % 11);
    CHECK(intersection_graph(m) == oracle::intersection_graph(m));
  }
}

TEST_CASE("helly_report") {
  HellyReport a = helly_report(model(6, {{0, 1}, {0, 2}, {0, 3}}));
  CHECK(a.is_helly);
  REQUIRE(a.clique_points.size() == 1);
  CHECK(a.clique_points[0] == 0);
  HellyReport b = helly_report(kTriangleCover);
  CHECK_FALSE(b.is_helly);
  REQUIRE(b.violator);
  CHECK(*b.violator == VertexSet{0, 1, 2});
}

TEST_CASE("helly_report agrees with the subfamily definition") {
  fixtures::Rng rng(22);
  int non_helly = 0;
  for (int t = 0; t < 2000; ++t) {
    ArcModel m = fixtures::random_model(rng, 1 + t % 6, 2 + t % 9);
    bool want = oracle::is_helly(m);
    CHECK(helly_report(m).is_helly == want);
    non_helly += want ? 0 : 1;
  }
  CHECK(non_helly > 20);
}

TEST_CASE("is_proper") {
  CHECK_FALSE(is_proper(model(6, {{0, 3}, {1, 2}})));
  CHECK(is_proper(kTriangleCover));
  CHECK(is_proper(model(6, {{1, 4}})));
}

TEST_CASE("normalize_extremes") {
  ArcModel shared = normalize_extremes(model(6, {{0, 1}, {0, 2}}));
  std::set<int> ends;
  for (const Arc& a : shared.arcs) {
    ends.insert(a.start);
    ends.insert(a.end);
  }
  CHECK(ends.size() == 4);
  CHECK(intersection_graph(shared) == complete_graph(2));
  ArcModel tri = normalize_extremes(kTriangleCover);
  CHECK(tri.circle_size == 6);
  CHECK_FALSE(oracle::is_helly(tri));
  CHECK(intersection_graph(tri) == complete_graph(3));
  ArcModel p4 = model(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  CHECK(isomorphic(intersection_graph(normalize_extremes(p4)), intersection_graph(p4)));
  CHECK_THROWS_AS(normalize_extremes(model(4, {{0, 0, true}})), InputError);
  fixtures::Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    ArcModel m = fixtures::random_model(rng, 1 + t % 7, 2 + t % 9);
    for (Arc& a : m.arcs) a.full = false;
    ArcModel n = normalize_extremes(m);
    CHECK(intersection_graph(n) == intersection_graph(m));
    CHECK(oracle::is_helly(n) == oracle::is_helly(m));
  }
}

TEST_CASE("submodel") {
  CHECK(submodel(kTriangleCover, VertexSet{0, 1, 2}) == kTriangleCover);
  CHECK(intersection_graph(submodel(kTriangleCover, VertexSet{0, 1})) == complete_graph(2));
  ArcModel p4 = model(8, {{0, 2}, {2, 4}, {4, 6}, {6, 7}});
  CHECK(intersection_graph(submodel(p4, VertexSet{0, 2})).edge_count() == 0);
}

TEST_CASE("model files round trip and reject bad endpoints") {
  fixtures::Rng rng(24);
  for (int t = 0; t < 50; ++t) {
    ArcModel m = fixtures::random_model(rng, t % 10, 1 + t % 12);
    CHECK(parse_model_string(format_model(m)) == m);
  }
  CHECK_THROWS_AS(check_model(model(4, {{0, 4}})), InputError);
  CHECK_THROWS_AS(check_model(model(0, {})), InputError);
}

TEST_CASE("circular_ones_row_order") {
  BinaryMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.set(i, i, true);
  auto order = circular_ones_row_order(id);
  REQUIRE(order);
  CHECK(is_circular_under(id, *order));
  CHECK(circular_ones_row_order(BinaryMatrix(0, 0)));
}

TEST_CASE("circular and consecutive ones agree with all permutations") {
  fixtures::Rng rng(25);
  int yes = 0;
  for (int t = 0; t < 3000; ++t) {
    int rows = 1 + t % 8;
    int cols = 1 + fixtures::pick(rng, 8);
    BinaryMatrix m = t % 3 == 0 ? fixtures::random_circular_matrix(rng, rows, cols)
                                : fixtures::random_matrix(rng, rows, cols, 25 + t % 50);
    bool want = oracle::has_circular_ones(oracle::rows_of(m));
    auto got = circular_ones_row_order(m);
    CHECK(got.has_value() == want);
    if (got) CHECK(oracle::circular_runs(oracle::rows_of(m), *got));
    yes += want ? 1 : 0;
    auto lin = consecutive_ones_row_order(m);
    CHECK(lin.has_value() == consecutive_ones_brute_force(m).has_value());
    if (lin) CHECK(is_consecutive_under(m, *lin));
  }
  CHECK(yes > 500);
  CHECK(yes < 2900);
}
