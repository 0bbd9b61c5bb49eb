#include "lpa/witness.hpp"

#include <algorithm>

namespace lpa {

FactorDirection parse_direction(const std::string& text) {
  if (text == "pos-neg") return FactorDirection::PosNeg;
  if (text == "neg-pos") return FactorDirection::NegPos;
  fail(ErrorKind::InvalidInput, "direction must be pos-neg or neg-pos");
}

std::string direction_to_string(FactorDirection dir) {
  return dir == FactorDirection::PosNeg ? "pos-neg" : "neg-pos";
}

long long default_level_bound(const Graph& g) {
  LengthProfile profile = length_profiles(g);
  return 2LL * (profile.preperiod + profile.period) * std::max(1, g.vertex_count());
}

namespace {

// All paths alpha with |alpha| = depth and r(alpha) = v, depth-first in
// enumeration order. Every vertex expanded along the way must be regular.
std::vector<Path> expansion_level(const Graph& g, int v, long long depth) {
  std::vector<Path> out;
  std::vector<int> acc;
  auto grow = [&](auto&& self, int at, long long remaining) -> void {
    if (remaining == 0) {
      out.push_back(acc.empty() ? Path::at_vertex(v) : Path::from_edges(g, acc));
      return;
    }
    if (g.receivers(at).empty())
      fail(ErrorKind::IrregularVertexOnExpansion,
           "vertex '" + g.vertex_id(at) + "' is a source; p_v cannot expand through it");
    for (int pos : g.receivers(at)) {
      acc.push_back(pos);
      self(self, g.edge_source(pos), remaining - 1);
      acc.pop_back();
    }
  };
  grow(grow, v, depth);
  return out;
}

FactorizationWitness make_unit_witness(const GraphPtr& graph, int v, long long deg_left,
                                       long long deg_right, long long level,
                                       std::vector<std::pair<LpaElement, LpaElement>> pairs) {
  FactorizationWitness w;
  w.target = LpaElement::vertex_unit(graph, v);
  w.deg_left = deg_left;
  w.deg_right = deg_right;
  w.level = level;
  w.pairs = std::move(pairs);
  if (!verify_factorization(w))
    fail(ErrorKind::InvalidInput, "internal: emitted witness failed verification");
  return w;
}

}  // namespace

FactorResult factor_local_unit(GraphPtr graph, int v, long long k, FactorDirection dir,
                               long long max_level) {
  const Graph& g = *graph;
  g.require_simple("factor_local_unit");
  if (v < 0 || v >= g.vertex_count()) fail(ErrorKind::UnknownId, "vertex index out of range");
  if (k < 1) fail(ErrorKind::InvalidInput, "degree k must be at least 1");
  if (max_level < 0) max_level = default_level_bound(g);

  if (dir == FactorDirection::PosNeg) {
    // p_v = sum over |alpha| = k, r(alpha) = v of alpha alpha*.
    std::vector<std::pair<LpaElement, LpaElement>> pairs;
    for (const Path& alpha : expansion_level(g, v, k)) {
      Path at_source = Path::at_vertex(alpha.source(g));
      pairs.emplace_back(LpaElement::monomial(graph, Monomial{alpha, at_source}),
                         LpaElement::monomial(graph, Monomial{at_source, alpha}));
    }
    return make_unit_witness(graph, v, k, -k, k, std::move(pairs));
  }

  LengthProfile profile = length_profiles(g);
  std::vector<Path> level{Path::at_vertex(v)};
  for (long long m = 0; m <= max_level; ++m) {
    bool all = std::all_of(level.begin(), level.end(), [&](const Path& alpha) {
      return profile.member(alpha.source(g), m + k);
    });
    if (all) {
      std::vector<std::pair<LpaElement, LpaElement>> pairs;
      for (const Path& alpha : level) {
        auto beta = path_of_length(g, alpha.source(g), m + k);
        if (!beta) fail(ErrorKind::InvalidInput, "internal: member without witness path");
        pairs.emplace_back(LpaElement::monomial(graph, Monomial{alpha, *beta}),
                           LpaElement::monomial(graph, Monomial{*beta, alpha}));
      }
      return make_unit_witness(graph, v, -k, k, m, std::move(pairs));
    }
    if (m == max_level) break;
    // Extend to level m+1; the collapse sum over the next level equals p_v
    // only when every source vertex of the current level is regular.
    std::vector<Path> next;
    for (const Path& alpha : level) {
      int w = alpha.source(g);
      if (g.receivers(w).empty())
        return NotFoundUpTo{max_level,
                            "levels beyond " + std::to_string(m) + " are blocked: vertex '" +
                                g.vertex_id(w) + "' is a source"};
      for (int pos : g.receivers(w)) {
        Path extended = alpha;
        extended.edges.push_back(pos);
        if (extended.edges.size() == 1) extended.range_vertex = g.edge_range(pos);
        next.push_back(std::move(extended));
      }
    }
    level = std::move(next);
  }
  return NotFoundUpTo{max_level, ""};
}

FactorResult factor_homogeneous(const LpaElement& x, long long a, long long b,
                                long long max_level) {
  const GraphPtr& graph = x.graph();
  if (!graph) fail(ErrorKind::InvalidInput, "element is not bound to a graph");
  graph->require_simple("factor_homogeneous");
  auto deg = x.homogeneous_degree();
  if (!deg) fail(ErrorKind::InvalidInput, "element is not homogeneous");
  if (!x.is_zero() && a + b != *deg)
    fail(ErrorKind::InvalidInput, "split (a, b) must satisfy a + b = deg(x)");
  if (max_level < 0) max_level = default_level_bound(*graph);

  FactorizationWitness w;
  w.target = x;
  w.deg_left = a;
  w.deg_right = b;
  w.level = 0;

  for (const auto& [m, c] : x.terms()) {
    LpaElement word = LpaElement::monomial(graph, m, c);
    int source = m.beta.source(*graph);
    if (b == 0) {
      w.pairs.emplace_back(word, LpaElement::vertex_unit(graph, source));
      continue;
    }
    // word = word . p_source, and p_source splits at residual degrees (-b, b).
    FactorResult sub;
    try {
      sub = factor_local_unit(graph, source, b > 0 ? b : -b,
                              b > 0 ? FactorDirection::NegPos : FactorDirection::PosNeg,
                              max_level);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::IrregularVertexOnExpansion) throw;
      return NotFoundUpTo{max_level, std::string("splitting p_") + graph->vertex_id(source) +
                                         " for " + monomial_to_string(*graph, m) +
                                         " is blocked: " + err.what()};
    }
    if (auto* miss = std::get_if<NotFoundUpTo>(&sub)) {
      NotFoundUpTo out = *miss;
      out.note = "no split of p_" + graph->vertex_id(source) + " for " +
                 monomial_to_string(*graph, m) + (out.note.empty() ? "" : "; " + out.note);
      return out;
    }
    const auto& unit_witness = std::get<FactorizationWitness>(sub);
    w.level = std::max(w.level, unit_witness.level);
    for (const auto& [u, u_star] : unit_witness.pairs)
      w.pairs.emplace_back(multiply(word, u), u_star);
  }

  if (!verify_factorization(w))
    fail(ErrorKind::InvalidInput, "internal: assembled witness failed verification");
  return w;
}

bool verify_factorization(const FactorizationWitness& w) {
  const GraphPtr& graph = w.target.graph();
  if (!graph) return false;
  LpaElement sum(graph);
  for (const auto& [x, y] : w.pairs) {
    if (!x.graph() || !y.graph() || !(*x.graph() == *graph) || !(*y.graph() == *graph))
      return false;
    auto dx = x.homogeneous_degree();
    auto dy = y.homogeneous_degree();
    if (!dx || !dy) return false;
    if (!x.is_zero() && *dx != w.deg_left) return false;
    if (!y.is_zero() && *dy != w.deg_right) return false;
    sum = add(sum, multiply(x, y));
  }
  return sum == w.target;
}

}  // namespace lpa
