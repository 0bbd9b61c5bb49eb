#pragma once

#include <map>
#include <vector>

#include "lpa/core.hpp"
#include "lpa/groupoid.hpp"

// Independent dimension oracle for spans of degree-0 words on source-free
// graphs: evaluate each word as a function on boundary-path groupoid points
// (via the word <-> cylinder-indicator dictionary) and take the exact rank
// of the evaluation matrix. No normal forms, no Cuntz-Krieger rewriting.

namespace oracle {

// Canonical boundary continuation from a vertex: always follow the least
// received edge until the walk closes up.
inline lpa::LassoPath canonical_tail(const lpa::Graph& g, int from) {
  std::vector<int> walk;
  std::vector<int> seen_at(g.vertex_count(), -1);
  int at = from;
  seen_at[at] = 0;
  while (true) {
    int pos = g.receivers(at).front();
    walk.push_back(pos);
    at = g.edge_source(pos);
    if (seen_at[at] >= 0) {
      lpa::LassoPath lasso;
      int split = seen_at[at];
      lasso.cycle = lpa::Path::from_edges(
          g, std::vector<int>(walk.begin() + split, walk.end()));
      if (split == 0)
        lasso.prefix = lpa::Path::at_vertex(lasso.cycle.range());
      else
        lasso.prefix =
            lpa::Path::from_edges(g, std::vector<int>(walk.begin(), walk.begin() + split));
      return lpa::lasso_canonicalize(g, lasso);
    }
    seen_at[at] = static_cast<int>(walk.size());
  }
}

// All paths of length <= depth with range v (possible continuations).
inline std::vector<lpa::Path> continuations(const lpa::Graph& g, int v, int depth) {
  std::vector<lpa::Path> out{lpa::Path::at_vertex(v)};
  std::vector<int> acc;
  auto grow = [&](auto&& self, int at, int left) -> void {
    if (left == 0) return;
    for (int pos : g.receivers(at)) {
      acc.push_back(pos);
      out.push_back(lpa::Path::from_edges(g, acc));
      self(self, g.edge_source(pos), left - 1);
      acc.pop_back();
    }
  };
  grow(grow, v, depth);
  return out;
}

/// Exact rank of span{[alpha_i|beta_i]} via boundary-point evaluation.
/// All words must have degree 0 and leg length <= depth.
inline long long evaluation_rank(const lpa::Graph& g,
                                 const std::vector<lpa::Monomial>& words, int depth) {
  // Separating points: (alpha . eta . rho, 0, beta . eta . rho) over all
  // spanning pairs and continuations eta of length <= depth.
  std::vector<lpa::GroupoidElement> points;
  for (const lpa::Monomial& m : words) {
    int src = m.alpha.source(g);
    for (const lpa::Path& eta : continuations(g, src, depth)) {
      lpa::LassoPath tail = canonical_tail(g, eta.source(g));
      lpa::LassoPath x, y;
      x.cycle = tail.cycle;
      x.prefix = lpa::compose(g, lpa::compose(g, m.alpha, eta), tail.prefix);
      y.cycle = tail.cycle;
      y.prefix = lpa::compose(g, lpa::compose(g, m.beta, eta), tail.prefix);
      auto validated = lpa::element_validate(g, x, 0, y);
      if (validated.outcome == lpa::ElementOutcome::Valid)
        points.push_back(*validated.element);
    }
  }

  // Evaluation matrix, exact Gaussian elimination with partial column order.
  std::vector<std::vector<lpa::Rational>> rows;
  for (const lpa::Monomial& m : words) {
    std::vector<lpa::Rational> row;
    lpa::CylinderBisection z{m.alpha, m.beta};
    for (const auto& pt : points)
      row.push_back(lpa::element_in_bisection(g, pt, z) ? 1 : 0);
    rows.push_back(std::move(row));
  }
  long long rank = 0;
  std::size_t cols = points.size();
  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[lead], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      lpa::Rational factor = rows[r][col] / rows[lead][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[lead][c];
    }
    ++lead;
    ++rank;
  }
  return rank;
}

}  // namespace oracle
