#include "lpa/core.hpp"

#include <algorithm>
#include <random>

namespace lpa {

bool RowSpace::add(Vector vec) {
  while (!vec.empty()) {
    auto lead = vec.begin();
    auto hit = pivot_row_.find(lead->first);
    if (hit == pivot_row_.end()) {
      Rational inv = lead->second;
      for (auto& [m, c] : vec) c /= inv;
      pivot_row_.emplace(vec.begin()->first, static_cast<int>(rows_.size()));
      rows_.push_back(std::move(vec));
      return true;
    }
    const Vector& row = rows_[hit->second];
    Rational factor = lead->second;
    for (const auto& [m, c] : row) {
      auto it = vec.find(m);
      Rational next = (it == vec.end() ? Rational(0) : it->second) - factor * c;
      if (next == 0) {
        if (it != vec.end()) vec.erase(it);
      } else if (it == vec.end()) {
        vec.emplace(m, next);
      } else {
        it->second = next;
      }
    }
  }
  return false;
}

bool RowSpace::contains(Vector vec) const {
  return coordinates(std::move(vec)).has_value();
}

std::optional<std::vector<Rational>> RowSpace::coordinates(Vector vec) const {
  std::vector<Rational> coords(rows_.size(), Rational(0));
  while (!vec.empty()) {
    auto lead = vec.begin();
    auto hit = pivot_row_.find(lead->first);
    if (hit == pivot_row_.end()) return std::nullopt;
    const Vector& row = rows_[hit->second];
    Rational factor = lead->second;
    coords[hit->second] += factor;
    for (const auto& [m, c] : row) {
      auto it = vec.find(m);
      Rational next = (it == vec.end() ? Rational(0) : it->second) - factor * c;
      if (next == 0) {
        if (it != vec.end()) vec.erase(it);
      } else if (it == vec.end()) {
        vec.emplace(m, next);
      } else {
        it->second = next;
      }
    }
  }
  return coords;
}

MatrixUnitSystem matrix_units(GraphPtr graph, int k, int J, int v) {
  const Graph& g = *graph;
  g.require_simple("matrix_units");
  if (k < 0 || J < 0) fail(ErrorKind::InvalidInput, "k and J must be nonnegative");
  if (v < 0 || v >= g.vertex_count()) fail(ErrorKind::UnknownId, "vertex index out of range");
  if (k == 0) {
    auto level0 = enumerate_paths(g, 0, J);
    bool present = std::any_of(level0.begin(), level0.end(),
                               [&](const Path& p) { return p.range_vertex == v; });
    if (!present)
      fail(ErrorKind::InvalidInput,
           "vertex '" + g.vertex_id(v) + "' is not in E^0_J for J = " + std::to_string(J));
  }

  MatrixUnitSystem sys;
  sys.k = k;
  sys.J = J;
  sys.vertex = v;
  sys.index = enumerate_paths(g, k, J, v);
  sys.relations_ok = true;

  const auto& paths = sys.index;
  auto unit = [&](const Path& a, const Path& b) {
    return LpaElement::monomial(graph, Monomial{a, b});
  };
  for (const Path& a : paths)
    for (const Path& b : paths)
      for (const Path& c : paths)
        for (const Path& d : paths) {
          LpaElement product = multiply(unit(a, b), unit(c, d));
          LpaElement expected =
              b == c ? unit(a, d) : LpaElement(graph);
          ++sys.products_checked;
          if (!(product == expected)) sys.relations_ok = false;
        }
  return sys;
}

std::vector<Monomial> spanning_monomials(const Graph& g, int k, int J) {
  std::vector<Monomial> out;
  for (int l = 0; l <= k; ++l) {
    for (const Path& v : enumerate_paths(g, 0, J)) {
      auto level = enumerate_paths(g, l, J, v.range_vertex);
      for (const Path& a : level)
        for (const Path& b : level) out.push_back(Monomial{a, b});
    }
  }
  return out;
}

namespace {

RowSpace::Vector as_vector(const LpaElement& x) {
  return RowSpace::Vector(x.terms().begin(), x.terms().end());
}

LpaElement from_vector(const GraphPtr& graph, const RowSpace::Vector& vec) {
  RawElement raw(vec.begin(), vec.end());
  return normal_form(graph, raw);
}

}  // namespace

long long fd_dimension(GraphPtr graph, int k, int J) {
  const Graph& g = *graph;
  RowSpace space;
  for (const Monomial& m : spanning_monomials(g, k, J))
    space.add(as_vector(LpaElement::monomial(graph, m)));
  return space.dimension();
}

FdEmbedding embed_in_fd(GraphPtr graph, const RawElement& support) {
  if (!graph) fail(ErrorKind::InvalidInput, "element is not bound to a graph");
  const Graph& g = *graph;
  for (const auto& [m, c] : support) {
    validate_monomial(g, m);
    if (m.degree() != 0)
      fail(ErrorKind::NotDegreeZero, "embed_in_fd needs words with |alpha| = |beta|");
  }

  FdEmbedding out;
  out.support = support;
  out.element = LpaElement::from_terms(graph, support);
  for (const auto& [m, c] : support) {
    out.k = std::max(out.k, m.alpha.length());
    for (int pos : m.alpha.edges) out.J = std::max(out.J, pos + 1);
    for (int pos : m.beta.edges) out.J = std::max(out.J, pos + 1);
  }

  // Bare vertex words at vertices outside E^0_J need the span{p_v} extension.
  std::vector<char> in_level0(g.vertex_count(), 0);
  for (const Path& p : enumerate_paths(g, 0, out.J)) in_level0[p.range_vertex] = 1;
  for (const auto& [m, c] : support) {
    if (m.alpha.length() == 0 && !in_level0[m.alpha.range_vertex]) {
      int v = m.alpha.range_vertex;
      if (std::find(out.extra_vertices.begin(), out.extra_vertices.end(), v) ==
          out.extra_vertices.end())
        out.extra_vertices.push_back(v);
    }
  }
  std::sort(out.extra_vertices.begin(), out.extra_vertices.end());
  out.w_extension_applied = !out.extra_vertices.empty();

  RowSpace space;
  for (const Monomial& m : spanning_monomials(g, out.k, out.J))
    space.add(as_vector(LpaElement::monomial(graph, m)));
  for (int v : out.extra_vertices)
    space.add(as_vector(LpaElement::vertex_unit(graph, v)));

  out.dimension = space.dimension();
  for (const auto& row : space.basis()) out.basis.push_back(from_vector(graph, row));
  auto coords = space.coordinates(as_vector(out.element));
  if (!coords)
    fail(ErrorKind::InvalidInput, "internal: degree-0 element escaped its own span");
  out.coordinates = *coords;
  return out;
}

FdEmbedding embed_in_fd(const LpaElement& element) {
  auto deg = element.homogeneous_degree();
  if (!deg || *deg != 0)
    fail(ErrorKind::NotDegreeZero, "embed_in_fd needs a homogeneous degree-0 element");
  return embed_in_fd(element.graph(),
                     RawElement(element.terms().begin(), element.terms().end()));
}

ClosureReport verify_closure(GraphPtr graph, int k, int J, int samples, std::uint64_t seed) {
  const Graph& g = *graph;
  g.require_simple("verify_closure");
  ClosureReport report;
  std::mt19937_64 rng(seed);

  auto level0 = enumerate_paths(g, 0, J);
  if (level0.empty()) return report;

  // Component spans G_{l,J}(v), built once.
  std::map<std::pair<int, int>, RowSpace> component;
  std::map<std::pair<int, int>, std::vector<Monomial>> words;
  for (int l = 0; l <= k; ++l)
    for (const Path& vp : enumerate_paths(g, 0, J)) {
      int v = vp.range_vertex;
      auto level = enumerate_paths(g, l, J, v);
      for (const Path& a : level)
        for (const Path& b : level) {
          Monomial m{a, b};
          words[{l, v}].push_back(m);
          component[{l, v}].add(as_vector(LpaElement::monomial(graph, m)));
        }
    }

  auto pick = [&](const std::vector<Monomial>& pool) -> const Monomial& {
    return pool[static_cast<std::size_t>(rng() % pool.size())];
  };
  auto fail_with = [&](const std::string& what) {
    report.ok = false;
    if (report.first_failure.empty()) report.first_failure = what;
  };

  RowSpace whole;
  std::vector<Monomial> all = spanning_monomials(g, k, J);
  for (const Monomial& m : all) whole.add(as_vector(LpaElement::monomial(graph, m)));

  for (int i = 0; i < samples; ++i) {
    // Containment G_{k',J}(v) G_{l',J}(w) in G_{k',J}(v), both orders.
    if (k >= 1) {
      int kp = 1 + static_cast<int>(rng() % k);
      int lp = static_cast<int>(rng() % kp);
      const Path& vp = level0[rng() % level0.size()];
      const Path& wp = level0[rng() % level0.size()];
      auto hi = words.find({kp, vp.range_vertex});
      auto lo = words.find({lp, wp.range_vertex});
      if (hi != words.end() && !hi->second.empty() && lo != words.end() && !lo->second.empty()) {
        LpaElement x = LpaElement::monomial(graph, pick(hi->second));
        LpaElement y = LpaElement::monomial(graph, pick(lo->second));
        ++report.product_checks;
        if (!component[{kp, vp.range_vertex}].contains(as_vector(multiply(x, y))))
          fail_with("left product escaped its component");
        if (!component[{kp, vp.range_vertex}].contains(as_vector(multiply(y, x))))
          fail_with("right product escaped its component");
      }
    }

    // Equal-level cross-vertex products vanish.
    if (level0.size() >= 2) {
      int l = static_cast<int>(rng() % (k + 1));
      const Path& vp = level0[rng() % level0.size()];
      const Path& wp = level0[rng() % level0.size()];
      if (vp.range_vertex != wp.range_vertex) {
        auto lhs = words.find({l, vp.range_vertex});
        auto rhs = words.find({l, wp.range_vertex});
        if (lhs != words.end() && !lhs->second.empty() && rhs != words.end() &&
            !rhs->second.empty()) {
          LpaElement x = LpaElement::monomial(graph, pick(lhs->second));
          LpaElement y = LpaElement::monomial(graph, pick(rhs->second));
          ++report.cross_vertex_checks;
          if (!multiply(x, y).is_zero()) fail_with("cross-vertex product is nonzero");
        }
      }
    }

    // Star-closure of F_{k,J} on random spanning words.
    if (!all.empty()) {
      const Monomial& m = all[rng() % all.size()];
      ++report.star_checks;
      if (!whole.contains(as_vector(star(LpaElement::monomial(graph, m)))))
        fail_with("star escaped F_{k,J}");
    }
  }
  return report;
}

}  // namespace lpa
