#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "lpa/graph.hpp"

using namespace lpa;

TEST_CASE("validate_graph accepts the loop") {
  auto g = fixtures::loop();
  CHECK(g->vertex_count() == 1);
  CHECK(g->edge_count() == 1);
  CHECK(g->edge_range(0) == 0);
  CHECK(g->edge_source(0) == 0);
}

TEST_CASE("validate_graph rejects dangling endpoints and duplicate ids") {
  GraphInput dangling{{"v"}, {{"f", "z", "v", 1}}, {}};
  CHECK_THROWS_WITH_AS(Graph::validate(dangling),
                       doctest::Contains("unknown range vertex"), Error);
  try {
    Graph::validate(dangling);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DanglingEndpoint);
  }

  GraphInput dup{{"v"}, {{"e", "v", "v", 1}, {"e", "v", "v", 1}}, {}};
  try {
    Graph::validate(dup);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateId);
  }
}

TEST_CASE("empty graph is legal") {
  Graph g = Graph::validate({});
  CHECK(g.vertex_count() == 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("structural report") {
  auto report = structural_report(*fixtures::loop());
  CHECK(report.row_finite);
  CHECK(report.sources.empty());

  auto chain_report = structural_report(*fixtures::chain());
  REQUIRE(chain_report.sources.size() == 1);
  CHECK(fixtures::chain()->vertex_id(chain_report.sources[0]) == "w");

  auto omega = fixtures::make({{"v"}, {{"e", "v", "v", kOmega}}, {}});
  CHECK_FALSE(structural_report(*omega).row_finite);
  CHECK(structural_report(*omega).sources.empty());
}

TEST_CASE("step digraph sccs and infinite paths") {
  auto c2 = fixtures::c2();
  auto report = structural_report(*c2);
  REQUIRE(report.scc.size() == 1);
  CHECK(report.scc[0].size() == 2);
  CHECK(has_infinite_path(*c2));
  CHECK_FALSE(has_infinite_path(*fixtures::chain()));
}

TEST_CASE("enumerate_paths matches the spec examples") {
  auto loop = fixtures::loop();
  auto paths = enumerate_paths(*loop, 2, 1, 0);
  REQUIRE(paths.size() == 1);
  CHECK(path_to_string(*loop, paths[0]) == "e e");

  auto l2 = fixtures::l2();
  auto quad = enumerate_paths(*l2, 2, 2, 0);
  REQUIRE(quad.size() == 4);
  CHECK(path_to_string(*l2, quad[0]) == "e e");
  CHECK(path_to_string(*l2, quad[1]) == "e f");
  CHECK(path_to_string(*l2, quad[2]) == "f e");
  CHECK(path_to_string(*l2, quad[3]) == "f f");

  auto single = enumerate_paths(*l2, 1, 1, 0);
  REQUIRE(single.size() == 1);
  CHECK(path_to_string(*l2, single[0]) == "e");
}

TEST_CASE("enumerate_paths agrees with the tuple-scan oracle") {
  for (auto g : {fixtures::loop(), fixtures::l2(), fixtures::c2(), fixtures::chain()}) {
    for (int k = 1; k <= 3; ++k)
      for (int J = 0; J <= g->edge_count(); ++J)
        for (int v = 0; v < g->vertex_count(); ++v) {
          auto ours = enumerate_paths(*g, k, J, v);
          auto oracle = fixtures::enumerate_oracle(*g, k, J, v);
          REQUIRE(ours.size() == oracle.size());
          std::set<std::vector<int>> ours_set, oracle_set(oracle.begin(), oracle.end());
          for (const Path& p : ours) ours_set.insert(p.edges);
          CHECK(ours_set == oracle_set);
        }
  }
}

TEST_CASE("E^k_J is monotone in J") {
  auto l2 = fixtures::l2();
  for (int k = 0; k <= 3; ++k) {
    std::size_t prev = 0;
    for (int J = 0; J <= 2; ++J) {
      auto paths = enumerate_paths(*l2, k, J);
      CHECK(paths.size() >= prev);
      prev = paths.size();
    }
  }
}

TEST_CASE("E^0_J is the source set of the first J edges") {
  auto chain = fixtures::chain();
  CHECK(enumerate_paths(*chain, 0, 0).empty());
  auto level0 = enumerate_paths(*chain, 0, 1);
  REQUIRE(level0.size() == 1);
  CHECK(chain->vertex_id(level0[0].range_vertex) == "w");
}

TEST_CASE("enumerate_paths rejects omega and parallel multiplicities") {
  auto omega = fixtures::make({{"v"}, {{"e", "v", "v", kOmega}}, {}});
  CHECK_THROWS_AS(enumerate_paths(*omega, 1, 1), Error);
  auto parallel = fixtures::make({{"v"}, {{"e", "v", "v", 3}}, {}});
  CHECK_THROWS_AS(enumerate_paths(*parallel, 1, 1), Error);
}

TEST_CASE("ladder_instantiate matches the construction formulas") {
  Graph g = ladder_instantiate(LadderSpec{{}, 1, 0}, 2);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 5);
  for (const char* id : {"v0", "v1", "v2", "u1_1", "u2_1", "u2_2"})
    CHECK(g.find_vertex(id).has_value());
  for (const char* id : {"s1", "s2", "c1_1", "c2_1", "c2_2"})
    CHECK(g.find_edge_pos(id).has_value());

  Graph single = ladder_instantiate(LadderSpec{{0}, 0, 0}, 0);
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);

  Graph steep = ladder_instantiate(LadderSpec{{}, 2, 0}, 2);
  int branch_edges_at_v2 = 0;
  for (int i = 1; i <= 8; ++i)
    if (steep.find_edge_pos("c2_" + std::to_string(i))) ++branch_edges_at_v2;
  CHECK(branch_edges_at_v2 == 4);
}

TEST_CASE("ladder truncations have one source, at the spine end") {
  for (long long N : {1, 2, 4}) {
    Graph g = ladder_instantiate(LadderSpec{{}, 2, 0}, N);
    auto report = structural_report(g);
    CHECK(report.row_finite);
    REQUIRE(report.sources.size() == 1);
    CHECK(g.vertex_id(report.sources[0]) == ladder_vertex_id(N));
  }
}

TEST_CASE("path composition") {
  auto l2 = fixtures::l2();
  Path e = Path::from_edges(*l2, {0});
  Path f = Path::from_edges(*l2, {1});
  Path ef = compose(*l2, e, f);
  CHECK(ef.length() == 2);
  CHECK(ef.range() == 0);
  CHECK(ef.source(*l2) == 0);
  CHECK(compose(*l2, compose(*l2, e, f), e) == compose(*l2, e, compose(*l2, f, e)));

  auto chain = fixtures::chain();
  Path ce = Path::from_edges(*chain, {0});
  CHECK_THROWS_AS(compose(*chain, ce, ce), Error);  // s(e) = w, r(e) = v
}

TEST_CASE("custom enumeration changes positions, not validity") {
  auto g = fixtures::make({{"v"},
                           {{"e", "v", "v", 1}, {"f", "v", "v", 1}},
                           {"f", "e"}});
  CHECK(g->edge_id(0) == "f");
  CHECK(g->edge_id(1) == "e");
  CHECK(g->special_edge(0) == 0);  // f is now the special edge of v
}
