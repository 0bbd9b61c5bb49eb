#include <doctest.h>

#include "fixtures.hpp"
#include "lpa/core.hpp"
#include "lpa/parse.hpp"
#include "rank_oracle.hpp"

using namespace lpa;

TEST_CASE("matrix units on l2 at k=1, J=2") {
  auto l2 = fixtures::l2();
  auto sys = matrix_units(l2, 1, 2, 0);
  CHECK(sys.index.size() == 2);
  CHECK(sys.relations_ok);
  CHECK(sys.products_checked == 16);

  CHECK(parse_element("[e|f]", l2) * parse_element("[f|e]", l2) == parse_element("[e|e]", l2));
  CHECK((parse_element("[e|f]", l2) * parse_element("[e|f]", l2)).is_zero());
}

TEST_CASE("matrix units on the loop at k=2, J=1") {
  auto loop = fixtures::loop();
  auto sys = matrix_units(loop, 2, 1, 0);
  CHECK(sys.index.size() == 1);
  CHECK(sys.relations_ok);
  LpaElement unit = parse_element("[e e|e e]", loop);
  CHECK(unit * unit == unit);
  CHECK_FALSE(unit.is_zero());
}

TEST_CASE("matrix units demand v in E^0_J when k = 0") {
  auto chain = fixtures::chain();
  int v = *chain->find_vertex("v");
  CHECK_THROWS_AS(matrix_units(chain, 0, 1, v), Error);  // E^0_1 = {w}
  int w = *chain->find_vertex("w");
  auto sys = matrix_units(chain, 0, 1, w);
  CHECK(sys.index.size() == 1);
  CHECK(sys.relations_ok);
}

TEST_CASE("fd_dimension matches the hand values and the evaluation oracle") {
  auto loop = fixtures::loop();
  for (int k = 0; k <= 5; ++k) {
    CHECK(fd_dimension(loop, k, 1) == 1);
    CHECK(oracle::evaluation_rank(*loop, spanning_monomials(*loop, k, 1), k) == 1);
  }

  auto l2 = fixtures::l2();
  CHECK(fd_dimension(l2, 1, 2) == 4);
  CHECK(oracle::evaluation_rank(*l2, spanning_monomials(*l2, 1, 2), 1) == 4);
  CHECK(fd_dimension(l2, 0, 2) == 1);

  auto c2 = fixtures::c2();
  for (int k = 0; k <= 3; ++k)
    CHECK(fd_dimension(c2, k, 2) ==
          oracle::evaluation_rank(*c2, spanning_monomials(*c2, k, 2), k));
}

TEST_CASE("dim G_{k,J}(v) = |E^k_J v|^2") {
  auto l2 = fixtures::l2();
  for (int k = 1; k <= 3; ++k) {
    auto level = enumerate_paths(*l2, k, 2, 0);
    RowSpace space;
    for (const Path& a : level)
      for (const Path& b : level) {
        RowSpace::Vector vec;
        LpaElement unit = LpaElement::monomial(l2, Monomial{a, b});
        for (const auto& [m, c] : unit.terms()) vec.emplace(m, c);
        space.add(std::move(vec));
      }
    CHECK(space.dimension() == static_cast<long long>(level.size() * level.size()));
  }
}

TEST_CASE("F_{k,J} dimension bound is strict exactly when a collapse fits the cutoff") {
  // Bound: sum over l <= k, v in E^0_J of |E^l_J v|^2. With J = 1 the loop
  // collapses ([e|e] = [v|v]) inside the cutoff; l2 does not (f is outside).
  auto loop = fixtures::loop();
  CHECK(fd_dimension(loop, 1, 1) == 1);   // bound is 2
  auto l2 = fixtures::l2();
  CHECK(fd_dimension(l2, 1, 1) == 2);     // meets the bound
}

TEST_CASE("F_{k,J} grows monotonically as a subspace") {
  auto l2 = fixtures::l2();
  auto c2 = fixtures::c2();
  for (auto g : {l2, c2}) {
    for (int k = 0; k <= 2; ++k)
      for (int J = 0; J <= g->edge_count(); ++J) {
        RowSpace bigger_k, bigger_j;
        for (const Monomial& m : spanning_monomials(*g, k + 1, J)) {
          LpaElement e = LpaElement::monomial(g, m);
          bigger_k.add(RowSpace::Vector(e.terms().begin(), e.terms().end()));
        }
        for (const Monomial& m :
             spanning_monomials(*g, k, std::min(J + 1, g->edge_count()))) {
          LpaElement e = LpaElement::monomial(g, m);
          bigger_j.add(RowSpace::Vector(e.terms().begin(), e.terms().end()));
        }
        for (const Monomial& m : spanning_monomials(*g, k, J)) {
          LpaElement e = LpaElement::monomial(g, m);
          RowSpace::Vector vec(e.terms().begin(), e.terms().end());
          CHECK(bigger_k.contains(vec));
          CHECK(bigger_j.contains(vec));
        }
      }
  }
}

TEST_CASE("embed_in_fd examples") {
  auto loop = fixtures::loop();
  FdEmbedding a = embed_in_fd(parse_element("[e|e]", loop));
  CHECK(a.k == 1);
  CHECK(a.J == 1);
  CHECK(a.extra_vertices.empty());
  CHECK(a.dimension == 1);
  REQUIRE(a.basis.size() == 1);
  CHECK(a.basis[0] == parse_element("[v|v]", loop));

  auto l2 = fixtures::l2();
  FdEmbedding b = embed_in_fd(parse_element("[e|f]", l2));
  CHECK(b.k == 1);
  CHECK(b.J == 2);
  CHECK(b.extra_vertices.empty());
  CHECK(b.dimension == 4);

  auto chain = fixtures::chain();
  FdEmbedding c = embed_in_fd(parse_element("[v|v]", chain));
  CHECK(c.k == 0);
  CHECK(c.J == 0);
  REQUIRE(c.extra_vertices.size() == 1);
  CHECK(chain->vertex_id(c.extra_vertices[0]) == "v");
  CHECK(c.w_extension_applied);
  CHECK(c.dimension == 1);
}

TEST_CASE("embed_in_fd coordinates reproduce the element") {
  fixtures::Rng rng(71);
  for (auto g : {fixtures::l2(), fixtures::c2(), fixtures::chain()}) {
    for (int i = 0; i < 40; ++i) {
      LpaElement x = fixtures::random_degree0(g, rng);
      FdEmbedding e = embed_in_fd(x);
      LpaElement sum(g);
      REQUIRE(e.basis.size() == e.coordinates.size());
      for (std::size_t t = 0; t < e.basis.size(); ++t)
        sum = sum + e.coordinates[t] * e.basis[t];
      REQUIRE(sum == x);
    }
  }
}

TEST_CASE("embed_in_fd rejects non-degree-0 elements") {
  auto loop = fixtures::loop();
  try {
    embed_in_fd(parse_element("[e|v]", loop));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDegreeZero);
  }
}

TEST_CASE("closure examples from the lemma") {
  auto l2 = fixtures::l2();
  // [e|f] . [v|v] = [e|f] stays in G_{1,2}(v).
  CHECK(parse_element("[e|f]", l2) * LpaElement::vertex_unit(l2, 0) ==
        parse_element("[e|f]", l2));

  auto c2 = fixtures::c2();
  // Equal-level cross-vertex products vanish.
  for (const Path& a : enumerate_paths(*c2, 1, 2, 0))
    for (const Path& b : enumerate_paths(*c2, 1, 2, 1)) {
      LpaElement x = LpaElement::monomial(c2, Monomial{a, a});
      LpaElement y = LpaElement::monomial(c2, Monomial{b, b});
      CHECK((x * y).is_zero());
    }

  auto loop = fixtures::loop();
  auto report = verify_closure(loop, 2, 1, 60, 0);
  CHECK(report.ok);
  CHECK(report.star_checks > 0);
}

TEST_CASE("verify_closure samples pass on the fixtures") {
  for (auto g : {fixtures::l2(), fixtures::c2()}) {
    auto report = verify_closure(g, 2, 2, 120, 7);
    CHECK(report.ok);
    CHECK(report.product_checks > 0);
    if (g->vertex_count() > 1) CHECK(report.cross_vertex_checks > 0);
  }
}
