#include "lpa/algebra.hpp"

#include <algorithm>
#include <random>

namespace lpa {

void validate_path(const Graph& g, const Path& p) {
  if (p.range_vertex < 0 || p.range_vertex >= g.vertex_count())
    fail(ErrorKind::InvalidInput, "path anchor vertex out of range");
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    int pos = p.edges[i];
    if (pos < 0 || pos >= g.edge_count()) fail(ErrorKind::InvalidInput, "path edge out of range");
    if (i + 1 < p.edges.size() && g.edge_source(pos) != g.edge_range(p.edges[i + 1]))
      fail(ErrorKind::NotComposable, "leg '" + path_to_string(g, p) + "' is not composable");
  }
  if (!p.edges.empty() && g.edge_range(p.edges.front()) != p.range_vertex)
    fail(ErrorKind::InvalidInput, "path anchor disagrees with first edge");
}

void validate_monomial(const Graph& g, const Monomial& m) {
  validate_path(g, m.alpha);
  validate_path(g, m.beta);
  if (m.alpha.source(g) != m.beta.source(g))
    fail(ErrorKind::SourceMismatch,
         "legs of " + monomial_to_string(g, m) + " have different sources: '" +
             g.vertex_id(m.alpha.source(g)) + "' vs '" + g.vertex_id(m.beta.source(g)) + "'");
}

std::string monomial_to_string(const Graph& g, const Monomial& m) {
  return "[" + path_to_string(g, m.alpha) + "|" + path_to_string(g, m.beta) + "]";
}

namespace {

// Is `shorter` an initial segment of `longer`? Vertex paths anchor-match.
bool leg_prefix(const Path& shorter, const Path& longer) {
  if (shorter.edges.empty()) return shorter.range_vertex == longer.range_vertex;
  if (shorter.edges.size() > longer.edges.size()) return false;
  return std::equal(shorter.edges.begin(), shorter.edges.end(), longer.edges.begin());
}

// The remainder gamma' with longer = shorter . gamma'.
Path leg_rest(const Graph& g, const Path& longer, const Path& shorter) {
  if (shorter.edges.size() == longer.edges.size())
    return Path::at_vertex(longer.source(g));
  Path rest;
  rest.range_vertex = g.edge_range(longer.edges[shorter.edges.size()]);
  rest.edges.assign(longer.edges.begin() + static_cast<long>(shorter.edges.size()),
                    longer.edges.end());
  return rest;
}

}  // namespace

std::optional<Monomial> mono_mul(const Graph& g, const Monomial& m1, const Monomial& m2) {
  const Path& beta = m1.beta;
  const Path& gamma = m2.alpha;
  if (beta.edges.size() <= gamma.edges.size() && leg_prefix(beta, gamma)) {
    Path rest = leg_rest(g, gamma, beta);
    return Monomial{compose(g, m1.alpha, rest), m2.beta};
  }
  if (gamma.edges.size() < beta.edges.size() && leg_prefix(gamma, beta)) {
    Path rest = leg_rest(g, beta, gamma);
    return Monomial{m1.alpha, compose(g, m2.beta, rest)};
  }
  return std::nullopt;
}

namespace {

int word_size(const Monomial& m) { return m.alpha.length() + m.beta.length(); }

// Redex test: both legs end in the same edge and that edge is the special
// edge of its range vertex. On a simple finite graph every such vertex is
// regular, so the collapse rule applies exactly here.
bool reducible(const Graph& g, const Monomial& m) {
  if (m.alpha.edges.empty() || m.beta.edges.empty()) return false;
  int f = m.alpha.edges.back();
  if (m.beta.edges.back() != f) return false;
  return g.special_edge(g.edge_range(f)) == f;
}

Path drop_last(const Graph& g, const Path& p) {
  Path out;
  out.edges.assign(p.edges.begin(), p.edges.end() - 1);
  out.range_vertex = out.edges.empty() ? g.edge_range(p.edges.back()) : p.range_vertex;
  return out;
}

Path append_edge(const Path& p, int pos) {
  Path out = p;
  out.edges.push_back(pos);
  return out;
}

}  // namespace

LpaElement normal_form(GraphPtr graph, const RawElement& raw, std::uint64_t seed,
                       ReductionTrace* trace) {
  graph->require_simple("normal_form");
  LpaElement result(graph);
  const Graph& g = *graph;

  std::vector<std::pair<Monomial, Rational>> worklist(raw.begin(), raw.end());
  std::mt19937_64 rng(seed);
  auto settle = [&](const Monomial& m, const Rational& c) {
    auto it = result.terms_.find(m);
    if (it == result.terms_.end()) {
      if (c != 0) result.terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) result.terms_.erase(it);
    }
  };

  while (!worklist.empty()) {
    std::size_t idx = static_cast<std::size_t>(rng() % worklist.size());
    std::swap(worklist[idx], worklist.back());
    auto [m, c] = std::move(worklist.back());
    worklist.pop_back();
    if (c == 0) continue;
    if (!reducible(g, m)) {
      settle(m, c);
      continue;
    }
    int f = m.alpha.edges.back();
    int w = g.edge_range(f);
    Path alpha_stub = drop_last(g, m.alpha);
    Path beta_stub = drop_last(g, m.beta);

    ReductionTrace::Step step;
    step.size_before = word_size(m);
    Monomial shrunk{alpha_stub, beta_stub};
    step.shrunk_size = word_size(shrunk);
    worklist.emplace_back(shrunk, c);
    for (int sibling : g.receivers(w)) {
      if (sibling == f) continue;
      Monomial emitted{append_edge(alpha_stub, sibling), append_edge(beta_stub, sibling)};
      if (trace) step.emitted.emplace_back(word_size(emitted), !reducible(g, emitted));
      worklist.emplace_back(std::move(emitted), -c);
    }
    if (trace) trace->steps.push_back(std::move(step));
  }
  return result;
}

LpaElement LpaElement::from_terms(GraphPtr graph, const RawElement& terms, std::uint64_t seed,
                                  ReductionTrace* trace) {
  for (const auto& [m, c] : terms) validate_monomial(*graph, m);
  return normal_form(std::move(graph), terms, seed, trace);
}

LpaElement LpaElement::vertex_unit(GraphPtr graph, int v) {
  Monomial unit{Path::at_vertex(v), Path::at_vertex(v)};
  return from_terms(std::move(graph), {{unit, 1}});
}

LpaElement LpaElement::monomial(GraphPtr graph, Monomial m, Rational coeff) {
  return from_terms(std::move(graph), {{std::move(m), std::move(coeff)}});
}

std::optional<long long> LpaElement::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  long long deg = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != deg) return std::nullopt;
  return deg;
}

bool LpaElement::operator==(const LpaElement& other) const {
  require_same_graph(*this, other);
  return terms_ == other.terms_;
}

void require_same_graph(const LpaElement& x, const LpaElement& y) {
  if (x.graph() == y.graph()) return;
  if (x.graph() && y.graph() && *x.graph() == *y.graph()) return;
  fail(ErrorKind::GraphMismatch, "elements bound to different graphs");
}

LpaElement add(const LpaElement& x, const LpaElement& y) {
  require_same_graph(x, y);
  RawElement raw(x.terms().begin(), x.terms().end());
  raw.insert(raw.end(), y.terms().begin(), y.terms().end());
  return normal_form(x.graph() ? x.graph() : y.graph(), raw);
}

LpaElement subtract(const LpaElement& x, const LpaElement& y) {
  return add(x, scale(-1, y));
}

LpaElement scale(const Rational& c, const LpaElement& x) {
  RawElement raw;
  for (const auto& [m, coeff] : x.terms()) raw.emplace_back(m, Rational(c * coeff));
  return normal_form(x.graph(), raw);
}

LpaElement multiply(const LpaElement& x, const LpaElement& y) {
  require_same_graph(x, y);
  RawElement raw;
  const Graph& g = *x.graph();
  for (const auto& [m1, c1] : x.terms())
    for (const auto& [m2, c2] : y.terms())
      if (auto product = mono_mul(g, m1, m2)) raw.emplace_back(*product, Rational(c1 * c2));
  return normal_form(x.graph(), raw);
}

LpaElement star(const LpaElement& x) {
  // Irreducibility is symmetric in the two legs, so the swap stays normal.
  RawElement raw;
  for (const auto& [m, c] : x.terms()) raw.emplace_back(Monomial{m.beta, m.alpha}, c);
  return normal_form(x.graph(), raw);
}

std::map<long long, LpaElement> grade_decompose(const LpaElement& x) {
  std::map<long long, RawElement> buckets;
  for (const auto& [m, c] : x.terms()) buckets[m.degree()].emplace_back(m, c);
  std::map<long long, LpaElement> out;
  for (auto& [deg, raw] : buckets) out.emplace(deg, normal_form(x.graph(), raw));
  return out;
}

std::string element_to_string(const LpaElement& x) {
  if (x.is_zero()) return "0";
  const Graph& g = *x.graph();
  std::string out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      // The grammar has no bare leading minus, so a negative head keeps an
      // explicit coefficient: "-1*[..]".
      if (c != 1) out += to_string(c) + "*";
    } else {
      out += c < 0 ? " - " : " + ";
      if (mag != 1) out += to_string(mag) + "*";
    }
    out += monomial_to_string(g, m);
    first = false;
  }
  return out;
}

}  // namespace lpa
