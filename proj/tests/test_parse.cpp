#include <doctest.h>

#include "fixtures.hpp"
#include "lpa/io.hpp"
#include "lpa/parse.hpp"

using namespace lpa;

TEST_CASE("element grammar basics") {
  auto loop = fixtures::loop();
  LpaElement x = parse_element("[e|v] + 3*[v|e]", loop);
  CHECK(x.terms().size() == 2);

  CHECK(parse_element("1/2*[v|v]", loop) ==
        Rational(1, 2) * LpaElement::vertex_unit(loop, 0));
  CHECK(parse_element("-3*[v|v] + [e|e]", loop) ==
        Rational(-2) * LpaElement::vertex_unit(loop, 0));
  CHECK(parse_element("0", loop).is_zero());
  CHECK(parse_element("[e|e] - [v|v]", loop).is_zero());
}

TEST_CASE("element grammar errors") {
  auto loop = fixtures::loop();
  try {
    parse_element("[e|f]", loop);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownId);
  }

  auto chain = fixtures::chain();
  // s(v) = v but s(e) = w.
  try {
    parse_element("[v|e]", chain);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SourceMismatch);
  }
  // [e|w] is fine: both legs end at w.
  CHECK_FALSE(parse_element("[e|w]", chain).is_zero());
  // e e is not composable on the chain.
  try {
    parse_element("[e e|w]", chain);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotComposable);
  }

  CHECK_THROWS_AS(parse_element("[e|v] +", loop), Error);
  CHECK_THROWS_AS(parse_element("3[v|v]", loop), Error);
  CHECK_THROWS_AS(parse_element("[|v]", loop), Error);
}

TEST_CASE("printing and parsing round-trip") {
  fixtures::Rng rng(61);
  for (auto g : {fixtures::loop(), fixtures::l2(), fixtures::c2(), fixtures::chain()}) {
    for (int i = 0; i < 150; ++i) {
      LpaElement x = fixtures::random_element(g, rng);
      LpaElement back = parse_element(element_to_string(x), g);
      REQUIRE(back == x);
    }
  }
}

TEST_CASE("lasso parsing") {
  auto loop = fixtures::loop();
  LassoPath x = parse_lasso("v;e", *loop);
  CHECK(x.prefix.length() == 0);
  CHECK(x.cycle.length() == 1);

  auto c2 = fixtures::c2();
  LassoPath y = parse_lasso("a;e1 e2", *c2);
  CHECK(lasso_to_string(*c2, y) == "a;e1 e2");

  CHECK_THROWS_AS(parse_lasso("v e", *loop), Error);     // no ';'
  CHECK_THROWS_AS(parse_lasso("v;", *loop), Error);      // empty cycle
  CHECK_THROWS_AS(parse_lasso("z;e", *loop), Error);     // unknown id
  auto chain = fixtures::chain();
  CHECK_THROWS_AS(parse_lasso("v;e", *chain), Error);    // cycle not closed
}

TEST_CASE("graph JSON round-trips") {
  auto l2 = fixtures::l2();
  Json j = graph_to_json(*l2);
  GraphOrLadder back = graph_from_json(j);
  REQUIRE_FALSE(back.is_ladder());
  CHECK(*back.graph == *l2);

  Json ladder = ladder_to_json(LadderSpec{{1, 2}, 2, -1});
  GraphOrLadder spec = graph_from_json(ladder);
  REQUIRE(spec.is_ladder());
  CHECK(spec.ladder->slope == 2);
  CHECK(spec.ladder->offset == -1);
  CHECK(spec.ladder->table == std::vector<long long>{1, 2});
}

TEST_CASE("graph JSON errors") {
  CHECK_THROWS_AS(load_graph("{not json"), Error);
  Json missing;
  missing["kind"] = "finite";
  CHECK_THROWS_AS(graph_from_json(missing), Error);
  Json omega = Json::parse(R"({"kind":"finite","vertices":["v"],
    "edges":[{"id":"e","range":"v","source":"v","mult":"omega"}]})");
  GraphOrLadder g = graph_from_json(omega);
  CHECK(g.graph->has_omega_edges());
}

TEST_CASE("a custom enumeration changes the special edge and normal forms") {
  Json j = Json::parse(R"({"kind":"finite","vertices":["v"],
    "edges":[{"id":"e","range":"v","source":"v"},{"id":"f","range":"v","source":"v"}],
    "enumeration":["f","e"]})");
  auto g = std::make_shared<const Graph>(*graph_from_json(j).graph);
  CHECK(element_to_string(parse_element("[f|f]", g)) == "[v|v] - [e|e]");
  CHECK(element_to_string(parse_element("[e|e]", g)) == "[e|e]");
}
