#pragma once

#include "lpa/graph.hpp"

namespace lpa {

/// Eventually periodic infinite path x = prefix . cycle . cycle . ...
/// The prefix may be a vertex path (empty prefix anchored at a vertex).
/// Invariants: |cycle| >= 1, s(prefix) = r(cycle), s(cycle) = r(cycle).
struct LassoPath {
  Path prefix;
  Path cycle;

  auto operator<=>(const LassoPath&) const = default;
  bool operator==(const LassoPath&) const = default;
};

void validate_lasso(const Graph& g, const LassoPath& x);

/// n-th edge of the infinite path, 1-based.
int lasso_edge(const LassoPath& x, long long n);

/// Vertex after n edges: r(x) for n = 0, s(x_n) for n >= 1.
int lasso_vertex(const Graph& g, const LassoPath& x, long long n);

std::string lasso_to_string(const Graph& g, const LassoPath& x);

}  // namespace lpa
