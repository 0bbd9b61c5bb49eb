#include "lpa/groupoid.hpp"

#include <algorithm>
#include <cassert>

namespace lpa {

void require_boundary_supported(const Graph& g) {
  g.require_simple("boundary-path calculus");
  StructuralReport report = structural_report(g);
  if (!report.sources.empty())
    fail(ErrorKind::InvalidInput,
         "boundary-path calculus needs a graph with no sources; '" +
             g.vertex_id(report.sources.front()) + "' receives no edge");
}

namespace {

Path rotate_right(const Graph& g, Path cycle) {
  int moved = cycle.edges.back();
  cycle.edges.pop_back();
  cycle.edges.insert(cycle.edges.begin(), moved);
  cycle.range_vertex = g.edge_range(moved);
  return cycle;
}

Path rotate_left(const Graph& g, Path cycle, long long by) {
  by %= cycle.length();
  if (by == 0) return cycle;
  std::rotate(cycle.edges.begin(), cycle.edges.begin() + static_cast<long>(by),
              cycle.edges.end());
  cycle.range_vertex = g.edge_range(cycle.edges.front());
  return cycle;
}

Path primitive_root(const Graph& g, const Path& cycle) {
  int p = cycle.length();
  for (int d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    bool periodic = true;
    for (int i = d; i < p && periodic; ++i)
      periodic = cycle.edges[i] == cycle.edges[i % d];
    if (periodic) {
      Path root;
      root.range_vertex = cycle.range_vertex;
      root.edges.assign(cycle.edges.begin(), cycle.edges.begin() + d);
      (void)g;
      return root;
    }
  }
  return cycle;
}

}  // namespace

LassoPath lasso_canonicalize(const Graph& g, const LassoPath& x) {
  validate_lasso(g, x);
  LassoPath out = x;
  out.cycle = primitive_root(g, out.cycle);
  // Absorb the common tail: while the prefix ends with the cycle's last edge,
  // the preperiod can drop by one.
  while (!out.prefix.edges.empty() && out.prefix.edges.back() == out.cycle.edges.back()) {
    out.cycle = rotate_right(g, out.cycle);
    out.prefix.edges.pop_back();
  }
  if (out.prefix.edges.empty()) out.prefix = Path::at_vertex(out.cycle.range());
  return out;
}

LassoPath lasso_shift(const Graph& g, const LassoPath& x, long long t) {
  LassoPath out = x;
  long long in_prefix = std::min<long long>(t, out.prefix.length());
  if (in_prefix > 0) {
    out.prefix.edges.erase(out.prefix.edges.begin(),
                           out.prefix.edges.begin() + static_cast<long>(in_prefix));
    if (!out.prefix.edges.empty())
      out.prefix.range_vertex = g.edge_range(out.prefix.edges.front());
    t -= in_prefix;
  }
  if (out.prefix.edges.empty()) {
    out.cycle = rotate_left(g, out.cycle, t % out.cycle.length());
    out.prefix = Path::at_vertex(out.cycle.range());
  }
  return lasso_canonicalize(g, out);
}

bool lasso_starts_with(const Graph& g, const LassoPath& x, const Path& p) {
  if (p.edges.empty()) return lasso_vertex(g, x, 0) == p.range_vertex;
  for (std::size_t i = 0; i < p.edges.size(); ++i)
    if (lasso_edge(x, static_cast<long long>(i) + 1) != p.edges[i]) return false;
  return true;
}

ElementValidation element_validate(const Graph& g, const LassoPath& x_in, long long k,
                                   const LassoPath& y_in) {
  LassoPath x = lasso_canonicalize(g, x_in);
  LassoPath y = lasso_canonicalize(g, y_in);

  // Tails are equivalent iff the primitive cycles are rotations of each other.
  const long long p = x.cycle.length();
  bool rotation_equivalent = false;
  if (p == y.cycle.length()) {
    for (long long r = 0; r < p && !rotation_equivalent; ++r)
      rotation_equivalent = rotate_left(g, y.cycle, r) == x.cycle;
  }
  if (!rotation_equivalent) return {ElementOutcome::TailsNotEquivalent, std::nullopt};

  const long long bound = x.prefix.length() + y.prefix.length() + 2 * p +
                          (k < 0 ? -k : k) + 2;
  for (long long m = std::max<long long>(0, -k); m <= bound; ++m) {
    if (lasso_shift(g, x, m + k) == lasso_shift(g, y, m)) {
      GroupoidElement e{x, k, y, m + k, m};
      return {ElementOutcome::Valid, e};
    }
  }
  return {ElementOutcome::LagMismatch, std::nullopt};
}

GroupoidElement groupoid_unit(const Graph& g, const LassoPath& x) {
  LassoPath c = lasso_canonicalize(g, x);
  return GroupoidElement{c, 0, c, 0, 0};
}

GroupoidElement groupoid_inverse(const Graph& g, const GroupoidElement& e) {
  (void)g;
  return GroupoidElement{e.y, -e.k, e.x, e.m, e.n};
}

GroupoidElement groupoid_compose(const Graph& g, const GroupoidElement& a,
                                 const GroupoidElement& b) {
  if (!(a.y == b.x))
    fail(ErrorKind::NotComposableTails, "middle boundary paths of the pair differ");
  auto result = element_validate(g, a.x, a.k + b.k, b.y);
  if (result.outcome != ElementOutcome::Valid)
    fail(ErrorKind::InvalidInput, "internal: composite of valid elements is invalid");
  return *result.element;
}

CylinderBisection make_bisection(const Graph& g, Path alpha, Path beta) {
  validate_path(g, alpha);
  validate_path(g, beta);
  if (alpha.source(g) != beta.source(g))
    fail(ErrorKind::SourceMismatch, "Z(alpha,beta) needs s(alpha) = s(beta)");
  return CylinderBisection{std::move(alpha), std::move(beta)};
}

std::optional<CylinderBisection> bisection_product(const Graph& g, const CylinderBisection& b,
                                                   const CylinderBisection& d) {
  // Deliberately spelled out on its own (not shared with mono_mul) so the
  // dictionary check between the two calculi is a real cross-check.
  const Path& beta = b.beta;
  const Path& gamma = d.alpha;

  auto extends = [&](const Path& shorter, const Path& longer) {
    if (shorter.edges.empty()) return longer.range_vertex == shorter.range_vertex;
    if (longer.edges.size() < shorter.edges.size()) return false;
    for (std::size_t i = 0; i < shorter.edges.size(); ++i)
      if (longer.edges[i] != shorter.edges[i]) return false;
    return true;
  };

  if (beta.length() <= gamma.length() && extends(beta, gamma)) {
    Path tail;
    if (gamma.length() == beta.length()) {
      tail = Path::at_vertex(gamma.source(g));
    } else {
      tail.edges.assign(gamma.edges.begin() + beta.length(), gamma.edges.end());
      tail.range_vertex = g.edge_range(tail.edges.front());
    }
    Path left = b.alpha;
    left.edges.insert(left.edges.end(), tail.edges.begin(), tail.edges.end());
    if (left.edges.empty()) left = Path::at_vertex(b.alpha.range_vertex);
    return CylinderBisection{left, d.beta};
  }
  if (gamma.length() < beta.length() && extends(gamma, beta)) {
    Path tail;
    tail.edges.assign(beta.edges.begin() + gamma.length(), beta.edges.end());
    tail.range_vertex = g.edge_range(tail.edges.front());
    Path right = d.beta;
    right.edges.insert(right.edges.end(), tail.edges.begin(), tail.edges.end());
    if (right.edges.empty()) right = Path::at_vertex(d.beta.range_vertex);
    return CylinderBisection{b.alpha, right};
  }
  return std::nullopt;
}

bool element_in_bisection(const Graph& g, const GroupoidElement& e, const CylinderBisection& b) {
  if (e.k != b.degree()) return false;
  if (!lasso_starts_with(g, e.x, b.alpha) || !lasso_starts_with(g, e.y, b.beta)) return false;
  return lasso_shift(g, e.x, b.alpha.length()) == lasso_shift(g, e.y, b.beta.length());
}

Rational element_value_at(const LpaElement& f, const GroupoidElement& point) {
  const Graph& g = *f.graph();
  Rational value = 0;
  for (const auto& [m, c] : f.terms())
    if (element_in_bisection(g, point, CylinderBisection{m.alpha, m.beta})) value += c;
  return value;
}

bool steinberg_product_check(const Graph& g, const Monomial& m1, const Monomial& m2) {
  auto word = mono_mul(g, m1, m2);
  auto bis = bisection_product(g, CylinderBisection{m1.alpha, m1.beta},
                               CylinderBisection{m2.alpha, m2.beta});
  if (!word) return !bis.has_value();
  if (!bis) return false;
  return word->alpha == bis->alpha && word->beta == bis->beta &&
         word->degree() == bis->degree() &&
         bis->degree() == m1.degree() + m2.degree();
}

GroupoidFactorResult factor_element(const Graph& g, const GroupoidElement& e, long long k,
                                    FactorDirection dir, const YOptions& opts) {
  require_boundary_supported(g);
  if (e.k != 0) fail(ErrorKind::InvalidInput, "factor_element needs a degree-0 element");
  if (k < 1) fail(ErrorKind::InvalidInput, "degree k must be at least 1");

  auto must_validate = [&](const LassoPath& a, long long lag, const LassoPath& b) {
    auto result = element_validate(g, a, lag, b);
    if (result.outcome != ElementOutcome::Valid)
      fail(ErrorKind::InvalidInput, "internal: constructed factor is invalid");
    return *result.element;
  };

  if (dir == FactorDirection::PosNeg) {
    LassoPath z = lasso_shift(g, e.x, k);
    return GroupoidFactorPair{must_validate(e.x, k, z), must_validate(z, -k, e.y)};
  }

  WitnessResult witness = property_y_witness(g, e.x, k, opts);
  if (auto* missing = std::get_if<ExhaustedProof>(&witness)) return *missing;
  const auto& found = std::get<WitnessFound>(witness);

  LassoPath shifted = lasso_shift(g, e.x, found.n);
  LassoPath z;
  z.cycle = shifted.cycle;
  z.prefix = compose(g, found.beta, shifted.prefix);
  z = lasso_canonicalize(g, z);
  return GroupoidFactorPair{must_validate(e.x, -k, z), must_validate(z, k, e.y)};
}

// --- Ladder spine counterpart ------------------------------------------

namespace {

struct LadderVertex {
  long long j = 0;  // stage
  long long i = 0;  // 0 = spine vertex v_j, otherwise branch vertex u_{j,i}
};

struct LadderEdge {
  bool spine = false;
  long long j = 0;
  long long i = 0;  // branch index for c_{j,i}
};

LadderEdge decode_ladder_edge(const LadderSpec& spec, const std::string& id) {
  auto parse_ll = [&](const std::string& s) -> std::optional<long long> {
    if (s.empty()) return std::nullopt;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    return std::stoll(s);
  };
  if (id.size() >= 2 && id[0] == 's') {
    auto j = parse_ll(id.substr(1));
    if (j && *j >= 1) return LadderEdge{true, *j, 0};
  }
  if (id.size() >= 2 && id[0] == 'c') {
    auto sep = id.find('_');
    if (sep != std::string::npos) {
      auto j = parse_ll(id.substr(1, sep - 1));
      auto i = parse_ll(id.substr(sep + 1));
      if (j && i && *i >= 1 && *i <= spec.branch_len(*j)) return LadderEdge{false, *j, *i};
    }
  }
  fail(ErrorKind::UnknownId, "'" + id + "' is not an edge of this ladder");
}

LadderVertex edge_range_vertex(const LadderEdge& e) {
  if (e.spine) return LadderVertex{e.j - 1, 0};
  return LadderVertex{e.j, e.i};
}

LadderVertex edge_source_vertex(const LadderEdge& e) {
  if (e.spine) return LadderVertex{e.j, 0};
  return LadderVertex{e.j, e.i - 1};
}

bool same_vertex(const LadderVertex& a, const LadderVertex& b) {
  return a.j == b.j && a.i == b.i;
}

// L(v) for a ladder vertex: full closed form on the spine, the climb-only
// segment {0..b_j - i} on a branch.
bool ladder_vertex_member(const LadderSpec& spec, const LadderVertex& v, long long m) {
  if (v.i == 0) return ladder_member(spec, v.j, m);
  return m <= spec.branch_len(v.j) - v.i;
}

}  // namespace

LadderBoundary ladder_canonicalize(const LadderSpec& spec, LadderBoundary x) {
  if (x.stage < 0) fail(ErrorKind::InvalidLasso, "spine stage must be nonnegative");
  std::vector<LadderEdge> decoded;
  for (const std::string& id : x.prefix_edge_ids) decoded.push_back(decode_ladder_edge(spec, id));
  for (std::size_t t = 0; t + 1 < decoded.size(); ++t)
    if (!same_vertex(edge_source_vertex(decoded[t]), edge_range_vertex(decoded[t + 1])))
      fail(ErrorKind::InvalidLasso, "ladder prefix is not composable at '" +
                                        x.prefix_edge_ids[t] + "'");
  if (!decoded.empty() &&
      !same_vertex(edge_source_vertex(decoded.back()), LadderVertex{x.stage, 0}))
    fail(ErrorKind::InvalidLasso, "ladder prefix does not end at v_" + std::to_string(x.stage));
  while (!x.prefix_edge_ids.empty() && x.stage >= 1 &&
         x.prefix_edge_ids.back() == ladder_spine_edge_id(x.stage)) {
    x.prefix_edge_ids.pop_back();
    --x.stage;
  }
  return x;
}

LadderBoundary ladder_shift(const LadderSpec& spec, const LadderBoundary& x, long long t) {
  LadderBoundary out = x;
  long long in_prefix = std::min<long long>(t, static_cast<long long>(out.prefix_edge_ids.size()));
  out.prefix_edge_ids.erase(out.prefix_edge_ids.begin(),
                            out.prefix_edge_ids.begin() + static_cast<long>(in_prefix));
  out.stage += t - in_prefix;
  return ladder_canonicalize(spec, out);
}

ElementOutcome ladder_element_validate(const LadderSpec& spec, const LadderBoundary& x,
                                       long long k, const LadderBoundary& y) {
  LadderBoundary cx = ladder_canonicalize(spec, x);
  LadderBoundary cy = ladder_canonicalize(spec, y);
  return k == cy.phase() - cx.phase() ? ElementOutcome::Valid : ElementOutcome::LagMismatch;
}

LadderFactorResult ladder_factor_element(const LadderSpec& spec, const LadderGroupoidElement& e,
                                         long long k, FactorDirection dir,
                                         const YOptions& opts) {
  spec.validate();
  if (e.k != 0) fail(ErrorKind::InvalidInput, "factor_element needs a degree-0 element");
  if (k < 1) fail(ErrorKind::InvalidInput, "degree k must be at least 1");
  LadderBoundary x = ladder_canonicalize(spec, e.x);
  LadderBoundary y = ladder_canonicalize(spec, e.y);

  if (dir == FactorDirection::PosNeg) {
    LadderBoundary z = ladder_shift(spec, x, k);
    return LadderFactorPair{LadderGroupoidElement{x, k, z}, LadderGroupoidElement{z, -k, y}};
  }

  // Scan the prefix part of x directly, then hand the spine tail to the
  // closed-form witness search with the prefix length folded into the degree.
  const long long P = static_cast<long long>(x.prefix_edge_ids.size());
  const long long min_n = opts.allow_empty_prefix ? 0 : 1;
  std::optional<long long> found_n;
  std::vector<std::string> beta_ids;

  std::vector<LadderEdge> decoded;
  for (const std::string& id : x.prefix_edge_ids) decoded.push_back(decode_ladder_edge(spec, id));

  for (long long n = min_n; n <= P && !found_n; ++n) {
    LadderVertex at = n == 0 ? (P > 0 ? edge_range_vertex(decoded[0]) : LadderVertex{x.stage, 0})
                             : edge_source_vertex(decoded[static_cast<std::size_t>(n - 1)]);
    if (!ladder_vertex_member(spec, at, n + k)) continue;
    found_n = n;
    if (at.i != 0) {
      // The only paths out of u_{j,i} climb the branch; list range-to-source.
      for (long long step = at.i + n + k; step > at.i; --step)
        beta_ids.push_back(ladder_branch_edge_id(at.j, step));
    } else {
      auto sub = ladder_property_y_witness(spec, at.j, n + k, YOptions{true});
      auto* hit = std::get_if<LadderWitnessFound>(&sub);
      if (!hit || hit->n != 0)
        fail(ErrorKind::InvalidInput, "internal: spine membership without a length witness");
      beta_ids = hit->beta_edge_ids;
    }
  }

  if (!found_n) {
    // On the spine tail the question at prefix length P + t is the witness
    // search from v_stage at degree k + P.
    YOptions sub_opts;
    sub_opts.allow_empty_prefix = opts.allow_empty_prefix || P >= 1;
    auto sub = ladder_property_y_witness(spec, x.stage, k + P, sub_opts);
    if (auto* missing = std::get_if<ExhaustedProof>(&sub)) {
      ExhaustedProof out = *missing;
      out.exact = true;
      return out;
    }
    const auto& hit = std::get<LadderWitnessFound>(sub);
    found_n = P + hit.n;
    beta_ids = hit.beta_edge_ids;
  }

  LadderBoundary shifted = ladder_shift(spec, x, *found_n);
  LadderBoundary z;
  z.prefix_edge_ids = beta_ids;
  z.prefix_edge_ids.insert(z.prefix_edge_ids.end(), shifted.prefix_edge_ids.begin(),
                           shifted.prefix_edge_ids.end());
  z.stage = shifted.stage;
  z = ladder_canonicalize(spec, z);
  return LadderFactorPair{LadderGroupoidElement{x, -k, z}, LadderGroupoidElement{z, k, y}};
}

}  // namespace lpa
