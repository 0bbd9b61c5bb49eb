#include "lpa/selftest.hpp"

#include <random>
#include <sstream>

#include "lpa/core.hpp"
#include "lpa/groupoid.hpp"
#include "lpa/lengths.hpp"
#include "lpa/witness.hpp"

namespace lpa {

namespace {

GraphPtr make_graph(GraphInput input) {
  return std::make_shared<const Graph>(Graph::validate(std::move(input)));
}

GraphPtr loop_graph() {
  return make_graph({{"v"}, {{"e", "v", "v", 1}}, {}});
}

GraphPtr chain_graph() {
  return make_graph({{"v", "w"}, {{"e", "v", "w", 1}}, {}});
}

GraphPtr l2_graph() {
  return make_graph({{"v"}, {{"e", "v", "v", 1}, {"f", "v", "v", 1}}, {}});
}

GraphPtr c2_graph() {
  return make_graph({{"a", "b"}, {{"e1", "a", "b", 1}, {"e2", "b", "a", 1}}, {}});
}

Path random_path_from(const Graph& g, int source, int max_len, std::mt19937_64& rng) {
  std::vector<int> back;  // built source-end first
  int at = source;
  int len = static_cast<int>(rng() % (max_len + 1));
  for (int i = 0; i < len; ++i) {
    const auto& out = g.emitters(at);
    if (out.empty()) break;
    int pos = out[rng() % out.size()];
    back.push_back(pos);
    at = g.edge_range(pos);
  }
  if (back.empty()) return Path::at_vertex(source);
  std::vector<int> fwd(back.rbegin(), back.rend());
  return Path::from_edges(g, fwd);
}

Monomial random_monomial(const Graph& g, std::mt19937_64& rng, int max_len = 3) {
  int w = static_cast<int>(rng() % g.vertex_count());
  return Monomial{random_path_from(g, w, max_len, rng), random_path_from(g, w, max_len, rng)};
}

RawElement random_raw(const Graph& g, std::mt19937_64& rng, int terms = 4) {
  RawElement raw;
  int n = 1 + static_cast<int>(rng() % terms);
  for (int i = 0; i < n; ++i) {
    long long num = static_cast<long long>(rng() % 9) - 4;
    if (num == 0) num = 1;
    long long den = 1 + static_cast<long long>(rng() % 3);
    raw.emplace_back(random_monomial(g, rng), Rational(num, den));
  }
  return raw;
}

LpaElement random_element(GraphPtr g, std::mt19937_64& rng, int terms = 4) {
  return LpaElement::from_terms(g, random_raw(*g, rng, terms));
}

std::optional<LassoPath> random_lasso(const Graph& g, std::mt19937_64& rng) {
  int at = static_cast<int>(rng() % g.vertex_count());
  std::vector<int> walk_edges;
  std::vector<int> seen_at(g.vertex_count(), -1);
  seen_at[at] = 0;
  for (int step = 0; step < 4 * g.vertex_count() + 8; ++step) {
    const auto& in = g.receivers(at);
    if (in.empty()) return std::nullopt;
    int pos = in[rng() % in.size()];
    walk_edges.push_back(pos);
    at = g.edge_source(pos);
    int step_index = static_cast<int>(walk_edges.size());
    if (seen_at[at] >= 0) {
      LassoPath lasso;
      int split = seen_at[at];
      std::vector<int> cyc(walk_edges.begin() + split, walk_edges.end());
      lasso.cycle = Path::from_edges(g, cyc);
      if (split == 0)
        lasso.prefix = Path::at_vertex(lasso.cycle.range());
      else
        lasso.prefix = Path::from_edges(g, std::vector<int>(walk_edges.begin(),
                                                            walk_edges.begin() + split));
      return lasso_canonicalize(g, lasso);
    }
    seen_at[at] = step_index;
  }
  return std::nullopt;
}

struct Suite {
  std::uint64_t seed;
  SelfTestResult result;

  void check(const std::string& name, bool ok) {
    result.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + name);
    if (!ok) result.ok = false;
  }
};

}  // namespace

SelfTestResult run_selftest(std::uint64_t seed) {
  Suite suite{seed, {}};
  std::vector<std::pair<std::string, GraphPtr>> graphs = {
      {"loop", loop_graph()},
      {"chain", chain_graph()},
      {"l2", l2_graph()},
      {"c2", c2_graph()},
      {"ladder4", std::make_shared<const Graph>(ladder_instantiate(LadderSpec{{}, 2, 0}, 4))},
  };

  for (const auto& [name, g] : graphs) {
    std::mt19937_64 rng(seed ^ std::hash<std::string>{}(name));
    bool assoc = true, dist = true;
    for (int i = 0; i < 60; ++i) {
      LpaElement x = random_element(g, rng), y = random_element(g, rng),
                 z = random_element(g, rng);
      if (!(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)))) assoc = false;
      if (!(multiply(x, add(y, z)) == add(multiply(x, y), multiply(x, z)))) dist = false;
    }
    suite.check("ring axioms on " + name, assoc && dist);

    bool confluent = true;
    for (int i = 0; i < 40; ++i) {
      RawElement raw = random_raw(*g, rng, 5);
      if (!(normal_form(g, raw, seed + i) == normal_form(g, raw, seed + 7919 + i)))
        confluent = false;
    }
    suite.check("normal-form confluence on " + name, confluent);

    bool graded = true;
    for (int i = 0; i < 60; ++i) {
      LpaElement x(g), y(g);
      {
        auto parts = grade_decompose(random_element(g, rng));
        if (parts.empty()) continue;
        x = parts.begin()->second;
        parts = grade_decompose(random_element(g, rng));
        if (parts.empty()) continue;
        y = parts.rbegin()->second;
      }
      LpaElement xy = multiply(x, y);
      if (!xy.is_zero()) {
        auto deg = xy.homogeneous_degree();
        if (!deg || *deg != *x.homogeneous_degree() + *y.homogeneous_degree()) graded = false;
      }
      auto sdeg = star(x).homogeneous_degree();
      if (!x.is_zero() && (!sdeg || *sdeg != -*x.homogeneous_degree())) graded = false;
    }
    suite.check("graded-ring law on " + name, graded);
  }

  // Length profiles against a top-down memoized oracle.
  {
    std::mt19937_64 rng(seed ^ 0xfeedULL);
    bool agree = true;
    for (int trial = 0; trial < 20 && agree; ++trial) {
      int n = 1 + static_cast<int>(rng() % 5);
      GraphInput input;
      for (int v = 0; v < n; ++v) input.vertices.push_back("v" + std::to_string(v));
      int edges = static_cast<int>(rng() % 9);
      for (int e = 0; e < edges; ++e)
        input.edges.push_back(EdgeSpec{"e" + std::to_string(e),
                                       input.vertices[rng() % n],
                                       input.vertices[rng() % n], 1});
      Graph g = Graph::validate(input);
      LengthProfile profile = length_profiles(g);
      long long horizon = profile.preperiod + 2LL * profile.period;
      std::map<std::pair<int, long long>, bool> memo;
      auto oracle = [&](auto&& self, int v, long long m) -> bool {
        if (m == 0) return true;
        auto key = std::make_pair(v, m);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        memo[key] = false;
        bool found = false;
        for (int pos : g.emitters(v))
          if (self(self, g.edge_range(pos), m - 1)) {
            found = true;
            break;
          }
        return memo[key] = found;
      };
      for (int v = 0; v < n && agree; ++v)
        for (long long m = 0; m <= horizon && agree; ++m)
          agree = profile.member(v, m) == oracle(oracle, v, m);
    }
    suite.check("length profiles match the path oracle", agree);
  }

  // Groupoid dictionary and laws on the source-free fixtures.
  for (const auto& [name, g] : graphs) {
    if (name == "chain" || name == "ladder4") continue;
    std::mt19937_64 rng(seed ^ 0xabcdULL ^ std::hash<std::string>{}(name));
    bool dictionary = true;
    for (int i = 0; i < 200; ++i)
      if (!steinberg_product_check(*g, random_monomial(*g, rng), random_monomial(*g, rng)))
        dictionary = false;
    suite.check("word/bisection dictionary on " + name, dictionary);

    bool laws = true;
    for (int i = 0; i < 40; ++i) {
      auto x = random_lasso(*g, rng);
      if (!x) continue;
      GroupoidElement unit = groupoid_unit(*g, *x);
      auto shifted = lasso_shift(*g, *x, 1 + (rng() % 3));
      auto val = element_validate(*g, *x, 0, *x);
      if (val.outcome != ElementOutcome::Valid) laws = false;
      auto factored = factor_element(*g, unit, 1 + (rng() % 2), FactorDirection::PosNeg);
      if (auto* pair = std::get_if<GroupoidFactorPair>(&factored)) {
        GroupoidElement back = groupoid_compose(*g, pair->left, pair->right);
        if (!(back.x == unit.x) || back.k != 0 || !(back.y == unit.y)) laws = false;
      } else {
        laws = false;
      }
      (void)shifted;
    }
    suite.check("groupoid laws on " + name, laws);
  }

  // Local-unit witnesses verify on the strongly graded fixtures.
  for (const auto& [name, g] : graphs) {
    if (name == "chain" || name == "ladder4") continue;
    bool sound = true;
    for (int v = 0; v < g->vertex_count(); ++v)
      for (long long k = 1; k <= 2; ++k)
        for (FactorDirection dir : {FactorDirection::PosNeg, FactorDirection::NegPos}) {
          auto result = factor_local_unit(g, v, k, dir, -1);
          auto* w = std::get_if<FactorizationWitness>(&result);
          if (!w || !verify_factorization(*w)) sound = false;
        }
    suite.check("local-unit witnesses verify on " + name, sound);
  }

  // Matrix units on l2.
  {
    auto sys = matrix_units(l2_graph(), 2, 2, 0);
    suite.check("matrix-unit relations on l2 (k=2, J=2)", sys.relations_ok);
  }

  return suite.result;
}

}  // namespace lpa
