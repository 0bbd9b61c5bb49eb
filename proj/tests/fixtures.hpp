#pragma once

#include <map>
#include <random>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/graph.hpp"
#include "lpa/lasso.hpp"

// Shared test fixtures and independent oracles. The oracles deliberately
// avoid the library's own code paths (profiles, enumeration DFS, normal
// forms) so agreement is evidence, not tautology.

namespace fixtures {

inline lpa::GraphPtr make(lpa::GraphInput input) {
  return std::make_shared<const lpa::Graph>(lpa::Graph::validate(std::move(input)));
}

inline lpa::GraphPtr loop() { return make({{"v"}, {{"e", "v", "v", 1}}, {}}); }

inline lpa::GraphPtr chain() { return make({{"v", "w"}, {{"e", "v", "w", 1}}, {}}); }

inline lpa::GraphPtr l2() {
  return make({{"v"}, {{"e", "v", "v", 1}, {"f", "v", "v", 1}}, {}});
}

inline lpa::GraphPtr c2() {
  return make({{"a", "b"}, {{"e1", "a", "b", 1}, {"e2", "b", "a", 1}}, {}});
}

inline lpa::GraphPtr ladder_truncation(long long slope, long long offset, long long N) {
  return std::make_shared<const lpa::Graph>(
      lpa::ladder_instantiate(lpa::LadderSpec{{}, slope, offset}, N));
}

// Top-down memoized oracle for "some path of length m has source v".
class MemberOracle {
 public:
  explicit MemberOracle(const lpa::Graph& g) : g_(g) {}

  bool operator()(int v, long long m) {
    if (m == 0) return true;
    auto key = std::make_pair(v, m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    memo_[key] = false;
    bool found = false;
    for (int pos : g_.emitters(v)) {
      if ((*this)(g_.edge_range(pos), m - 1)) {
        found = true;
        break;
      }
    }
    return memo_[key] = found;
  }

 private:
  const lpa::Graph& g_;
  std::map<std::pair<int, long long>, bool> memo_;
};

/// Literal path listing with source v and length exactly m (grows edge lists
/// front-to-back; exponential, keep m small).
inline std::vector<std::vector<int>> list_paths_with_source(const lpa::Graph& g, int v,
                                                            int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  auto grow = [&](auto&& self, int needed) -> void {
    if (needed == 0) {
      // acc holds edges source-end first; reverse into range-to-source order.
      std::vector<int> path(acc.rbegin(), acc.rend());
      out.push_back(std::move(path));
      return;
    }
    int at = acc.empty() ? v : g.edge_range(acc.back());
    for (int pos : g.emitters(at)) {
      acc.push_back(pos);
      self(self, needed - 1);
      acc.pop_back();
    }
  };
  grow(grow, m);
  return out;
}

/// Independent E^k_J oracle: plain nested tuple scan with a composability
/// filter (no DFS sharing with the library).
inline std::vector<std::vector<int>> enumerate_oracle(const lpa::Graph& g, int k, int J,
                                                      int source_vertex) {
  std::vector<std::vector<int>> out;
  if (k == 0) return out;
  std::vector<int> tuple(k, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = tuple[i] < J;
    if (ok) {
      for (int i = 0; i + 1 < k && ok; ++i)
        ok = g.edge_source(tuple[i]) == g.edge_range(tuple[i + 1]);
      if (ok && source_vertex >= 0) ok = g.edge_source(tuple[k - 1]) == source_vertex;
      if (ok) out.push_back(tuple);
    }
    int i = k - 1;
    while (i >= 0 && ++tuple[i] == g.edge_count()) tuple[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::uint64_t operator()(std::uint64_t bound) { return engine() % bound; }
};

inline lpa::Path random_path_from(const lpa::Graph& g, int source, int max_len, Rng& rng) {
  std::vector<int> back;
  int at = source;
  int len = static_cast<int>(rng(max_len + 1));
  for (int i = 0; i < len; ++i) {
    const auto& out = g.emitters(at);
    if (out.empty()) break;
    int pos = out[rng(out.size())];
    back.push_back(pos);
    at = g.edge_range(pos);
  }
  if (back.empty()) return lpa::Path::at_vertex(source);
  std::vector<int> fwd(back.rbegin(), back.rend());
  return lpa::Path::from_edges(g, fwd);
}

inline lpa::Monomial random_monomial(const lpa::Graph& g, Rng& rng, int max_len = 3) {
  int w = static_cast<int>(rng(g.vertex_count()));
  return lpa::Monomial{random_path_from(g, w, max_len, rng),
                       random_path_from(g, w, max_len, rng)};
}

inline lpa::RawElement random_raw(const lpa::Graph& g, Rng& rng, int max_terms = 4,
                                  int max_len = 3) {
  lpa::RawElement raw;
  int n = 1 + static_cast<int>(rng(max_terms));
  for (int i = 0; i < n; ++i) {
    long long num = static_cast<long long>(rng(9)) - 4;
    if (num == 0) num = 2;
    long long den = 1 + static_cast<long long>(rng(3));
    raw.emplace_back(random_monomial(g, rng, max_len), lpa::Rational(num, den));
  }
  return raw;
}

inline lpa::LpaElement random_element(lpa::GraphPtr g, Rng& rng, int max_terms = 4,
                                      int max_len = 3) {
  return lpa::LpaElement::from_terms(g, random_raw(*g, rng, max_terms, max_len));
}

/// Random degree-0 element (legs of equal length).
inline lpa::LpaElement random_degree0(lpa::GraphPtr g, Rng& rng, int max_terms = 3,
                                      int max_len = 3) {
  lpa::RawElement raw;
  int n = 1 + static_cast<int>(rng(max_terms));
  for (int i = 0; i < n; ++i) {
    for (int attempt = 0; attempt < 40; ++attempt) {
      lpa::Monomial m = random_monomial(*g, rng, max_len);
      if (m.degree() == 0) {
        raw.emplace_back(m, lpa::Rational(1 + static_cast<long long>(rng(5))));
        break;
      }
    }
  }
  if (raw.empty()) {
    int v = static_cast<int>(rng(g->vertex_count()));
    raw.emplace_back(lpa::Monomial{lpa::Path::at_vertex(v), lpa::Path::at_vertex(v)},
                     lpa::Rational(1));
  }
  return lpa::LpaElement::from_terms(g, raw);
}

inline std::optional<lpa::LassoPath> random_lasso(const lpa::Graph& g, Rng& rng) {
  int at = static_cast<int>(rng(g.vertex_count()));
  std::vector<int> walk;
  std::vector<int> seen_at(g.vertex_count(), -1);
  seen_at[at] = 0;
  for (int step = 0; step < 4 * g.vertex_count() + 8; ++step) {
    const auto& in = g.receivers(at);
    if (in.empty()) return std::nullopt;
    int pos = in[rng(in.size())];
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
      return lasso;
    }
    seen_at[at] = static_cast<int>(walk.size());
  }
  return std::nullopt;
}

/// First T edge positions of the infinite path, for unrolled comparisons.
inline std::vector<int> unroll(const lpa::LassoPath& x, int T) {
  std::vector<int> out;
  for (int n = 1; n <= T; ++n) out.push_back(lpa::lasso_edge(x, n));
  return out;
}

}  // namespace fixtures
