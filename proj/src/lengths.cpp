#include "lpa/lengths.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lpa {

void validate_lasso(const Graph& g, const LassoPath& x) {
  auto check_vertex = [&](int v, const char* what) {
    if (v < 0 || v >= g.vertex_count()) fail(ErrorKind::InvalidLasso, std::string(what) + " out of range");
  };
  check_vertex(x.prefix.range_vertex, "lasso prefix anchor");
  check_vertex(x.cycle.range_vertex, "lasso cycle anchor");
  auto check_path = [&](const Path& p, const char* what) {
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
      if (p.edges[i] < 0 || p.edges[i] >= g.edge_count())
        fail(ErrorKind::InvalidLasso, std::string(what) + " names an unknown edge");
      if (i + 1 < p.edges.size() && g.edge_source(p.edges[i]) != g.edge_range(p.edges[i + 1]))
        fail(ErrorKind::InvalidLasso, std::string(what) + " is not composable");
    }
    if (!p.edges.empty() && g.edge_range(p.edges.front()) != p.range_vertex)
      fail(ErrorKind::InvalidLasso, std::string(what) + " anchor disagrees with first edge");
  };
  check_path(x.prefix, "lasso prefix");
  check_path(x.cycle, "lasso cycle");
  if (x.cycle.edges.empty()) fail(ErrorKind::InvalidLasso, "lasso cycle must be nonempty");
  if (x.cycle.source(g) != x.cycle.range())
    fail(ErrorKind::InvalidLasso, "lasso cycle is not closed");
  if (x.prefix.source(g) != x.cycle.range())
    fail(ErrorKind::InvalidLasso, "lasso prefix does not end at the cycle");
}

int lasso_edge(const LassoPath& x, long long n) {
  const long long P = x.prefix.length();
  const long long C = x.cycle.length();
  if (n <= P) return x.prefix.edges[static_cast<std::size_t>(n - 1)];
  return x.cycle.edges[static_cast<std::size_t>((n - 1 - P) % C)];
}

int lasso_vertex(const Graph& g, const LassoPath& x, long long n) {
  if (n == 0) return x.prefix.range();
  return g.edge_source(lasso_edge(x, n));
}

std::string lasso_to_string(const Graph& g, const LassoPath& x) {
  return path_to_string(g, x.prefix) + ";" + path_to_string(g, x.cycle);
}

LengthProfile length_profiles(const Graph& g) {
  const int n = g.vertex_count();
  LengthProfile profile;
  std::map<std::vector<char>, int> seen;
  std::vector<char> current(n, 1);
  while (true) {
    auto [it, fresh] = seen.emplace(current, static_cast<int>(profile.table.size()));
    if (!fresh) {
      profile.preperiod = it->second;
      profile.period = static_cast<int>(profile.table.size()) - it->second;
      break;
    }
    profile.table.push_back(current);
    std::vector<char> next(n, 0);
    for (int v = 0; v < n; ++v) {
      for (int pos : g.emitters(v)) {
        if (current[g.edge_range(pos)]) {
          next[v] = 1;
          break;
        }
      }
    }
    current = std::move(next);
  }
  return profile;
}

std::optional<Path> path_of_length(const Graph& g, int v, long long len) {
  g.require_simple("path_of_length");
  if (len == 0) return Path::at_vertex(v);
  // reach[t][u] = does a path of length t with source v and range u exist
  std::vector<std::vector<char>> reach(static_cast<std::size_t>(len) + 1,
                                       std::vector<char>(g.vertex_count(), 0));
  reach[0][v] = 1;
  for (long long t = 0; t < len; ++t) {
    bool any = false;
    for (int u = 0; u < g.vertex_count(); ++u) {
      for (int pos : g.receivers(u)) {
        if (reach[t][g.edge_source(pos)]) {
          reach[t + 1][u] = 1;
          any = true;
          break;
        }
      }
    }
    if (!any) return std::nullopt;
  }
  // Greedy front-to-back choice gives the lexicographically least path.
  std::vector<int> edges;
  int at = -1;
  for (long long t = len; t >= 1; --t) {
    int chosen = -1;
    if (at < 0) {
      for (int pos = 0; pos < g.edge_count() && chosen < 0; ++pos)
        if (reach[t - 1][g.edge_source(pos)]) chosen = pos;
    } else {
      for (int pos : g.receivers(at)) {
        if (reach[t - 1][g.edge_source(pos)]) {
          chosen = pos;
          break;
        }
      }
    }
    if (chosen < 0) return std::nullopt;
    edges.push_back(chosen);
    at = g.edge_source(chosen);
  }
  return Path::from_edges(g, edges);
}

namespace {

// Product-graph search for a fixed degree k: states (folded counter, vertex),
// a state is bad when member(v, fold(j + k)) fails, and property (Y) fails for
// k exactly when an all-bad infinite walk exists, i.e. a bad cycle is
// reachable from a bad start state through bad states.
struct ProductSearch {
  const Graph& g;
  const LengthProfile& profile;
  long long k;
  bool allow_empty_prefix;
  int span;

  int state_id(long long j, int v) const { return static_cast<int>(j) * g.vertex_count() + v; }

  bool bad(long long j, int v) const { return !profile.member(v, profile.fold(j + k)); }

  std::vector<int> start_vertices() const {
    std::vector<char> mark(g.vertex_count(), 0);
    std::vector<int> out;
    for (int pos = 0; pos < g.edge_count(); ++pos) {
      int v = g.edge_source(pos);
      if (!mark[v]) {
        mark[v] = 1;
        out.push_back(v);
      }
    }
    return out;
  }

  // Returns a failing walk as (prefix states, cycle states) or nullopt.
  std::optional<std::pair<std::vector<std::pair<long long, int>>,
                          std::vector<std::pair<long long, int>>>>
  find_bad_walk() const {
    const int n_states = span * g.vertex_count();
    std::vector<char> reachable(n_states, 0);
    std::vector<int> parent(n_states, -1);
    std::vector<std::pair<long long, int>> queue;

    auto push_start = [&](long long j, int v) {
      if (!bad(j, v)) return;
      int id = state_id(j, v);
      if (reachable[id]) return;
      reachable[id] = 1;
      queue.emplace_back(j, v);
    };

    long long start_fold = profile.fold(1);
    for (int v : start_vertices()) push_start(start_fold, v);
    if (allow_empty_prefix) {
      for (int v = 0; v < g.vertex_count(); ++v)
        if (!g.receivers(v).empty()) push_start(profile.fold(0), v);
    }

    for (std::size_t head = 0; head < queue.size(); ++head) {
      auto [j, v] = queue[head];
      long long nj = profile.fold(j + 1);
      for (int w : step_successors(g, v)) {
        if (!bad(nj, w)) continue;
        int id = state_id(nj, w);
        if (reachable[id]) continue;
        reachable[id] = 1;
        parent[id] = state_id(j, v);
        queue.emplace_back(nj, w);
      }
    }

    // Cycle detection inside the reachable bad subgraph.
    std::vector<char> color(n_states, 0);  // 0 white, 1 gray, 2 black
    std::vector<int> dfs_parent(n_states, -1);
    for (auto [sj, sv] : queue) {
      int start = state_id(sj, sv);
      if (color[start] != 0) continue;
      std::vector<std::pair<int, std::size_t>> stack;
      std::vector<std::vector<int>> succs_by_depth;
      stack.push_back({start, 0});
      color[start] = 1;
      succs_by_depth.push_back(bad_successors(sj, sv, reachable));
      while (!stack.empty()) {
        auto& [id, next] = stack.back();
        auto& succ = succs_by_depth.back();
        if (next < succ.size()) {
          int to = succ[next++];
          if (color[to] == 1) {
            // Found a cycle: unwind the gray chain from id back to `to`.
            std::vector<int> cycle_states;
            int cur = id;
            cycle_states.push_back(to);
            while (cur != to) {
              cycle_states.push_back(cur);
              cur = dfs_parent[cur];
            }
            std::reverse(cycle_states.begin() + 1, cycle_states.end());
            return assemble(parent, to, cycle_states);
          }
          if (color[to] == 0) {
            color[to] = 1;
            dfs_parent[to] = id;
            stack.push_back({to, 0});
            succs_by_depth.push_back(
                bad_successors(to / g.vertex_count(), to % g.vertex_count(), reachable));
          }
        } else {
          color[id] = 2;
          stack.pop_back();
          succs_by_depth.pop_back();
        }
      }
    }
    return std::nullopt;
  }

  std::vector<int> bad_successors(long long j, int v, const std::vector<char>& reachable) const {
    std::vector<int> out;
    long long nj = profile.fold(j + 1);
    for (int w : step_successors(g, v)) {
      int id = state_id(nj, w);
      if (reachable[id]) out.push_back(id);
    }
    return out;
  }

  std::optional<std::pair<std::vector<std::pair<long long, int>>,
                          std::vector<std::pair<long long, int>>>>
  assemble(const std::vector<int>& parent, int cycle_entry, const std::vector<int>& cycle_states) const {
    auto unpack = [&](int id) {
      return std::pair<long long, int>{id / g.vertex_count(), id % g.vertex_count()};
    };
    std::vector<std::pair<long long, int>> prefix;
    for (int cur = cycle_entry; cur != -1; cur = parent[cur]) prefix.push_back(unpack(cur));
    std::reverse(prefix.begin(), prefix.end());
    prefix.pop_back();  // cycle entry belongs to the cycle part
    std::vector<std::pair<long long, int>> cycle;
    for (int id : cycle_states) cycle.push_back(unpack(id));
    return std::make_pair(prefix, cycle);
  }
};

// Least edge realizing a step-digraph move u -> w.
int realize_step(const Graph& g, int u, int w) {
  for (int pos : g.receivers(u))
    if (g.edge_source(pos) == w) return pos;
  fail(ErrorKind::InvalidInput, "internal: step edge not found");
}

LassoPath walk_to_lasso(const Graph& g, const std::vector<int>& vertex_walk,
                        std::size_t cycle_start, bool starts_at_n0) {
  // vertex_walk[i] = v_{n0 + i} with n0 = 0 (empty prefix allowed) or 1.
  std::vector<int> edges;
  if (!starts_at_n0) {
    // x_1 is any edge with s(x_1) = first walk vertex.
    edges.push_back(g.emitters(vertex_walk.front()).front());
  }
  for (std::size_t i = 0; i + 1 < vertex_walk.size(); ++i)
    edges.push_back(realize_step(g, vertex_walk[i], vertex_walk[i + 1]));
  // Close the cycle back to its first state.
  edges.push_back(realize_step(g, vertex_walk.back(), vertex_walk[cycle_start]));

  std::size_t prefix_edges = cycle_start + (starts_at_n0 ? 0 : 1);
  LassoPath out;
  std::vector<int> cyc(edges.begin() + static_cast<long>(prefix_edges), edges.end());
  out.cycle = Path::from_edges(g, cyc);
  if (prefix_edges == 0)
    out.prefix = Path::at_vertex(out.cycle.range());
  else
    out.prefix = Path::from_edges(
        g, std::vector<int>(edges.begin(), edges.begin() + static_cast<long>(prefix_edges)));
  return out;
}

}  // namespace

PropertyYVerdict decide_property_y(const Graph& g, const YOptions& opts) {
  LengthProfile profile = length_profiles(g);
  const int span = profile.preperiod + profile.period;

  PropertyYVerdict verdict;
  verdict.preperiod = profile.preperiod;
  verdict.period = profile.period;
  verdict.checked_k_max = span;

  // Bad sets for k and k + c coincide once k > p, so k = 1..p+c covers all
  // degrees; the least failing k overall, if any, lies in this window.
  for (long long k = 1; k <= span; ++k) {
    ProductSearch search{g, profile, k, opts.allow_empty_prefix, span};
    auto walk = search.find_bad_walk();
    if (!walk) continue;

    const auto& [prefix_states, cycle_states] = *walk;
    std::vector<int> vertex_walk;
    for (const auto& [j, v] : prefix_states) vertex_walk.push_back(v);
    std::size_t cycle_start = vertex_walk.size();
    for (const auto& [j, v] : cycle_states) vertex_walk.push_back(v);

    PropertyYFailure failure;
    failure.k = k;
    failure.lasso = walk_to_lasso(g, vertex_walk, cycle_start, opts.allow_empty_prefix);
    long long P = failure.lasso->prefix.length();
    long long C = failure.lasso->cycle.length();
    long long l = std::lcm<long long>(C, profile.period);
    failure.bound = std::max<long long>(
        {std::max<long long>(P, profile.preperiod) + l,
         (profile.preperiod + l) * g.vertex_count(), static_cast<long long>(span) * g.vertex_count() + 1});
    verdict.holds = false;
    verdict.failure = failure;
    return verdict;
  }
  verdict.holds = true;
  return verdict;
}

PropertyYVerdict decide_property_y(const LadderSpec& spec, const YOptions& opts) {
  (void)opts;  // the empty-prefix choice never changes ladder verdicts
  spec.validate();
  PropertyYVerdict verdict;
  auto margin = spec.max_branch_margin();
  if (!margin) {
    verdict.holds = true;
    verdict.slope = spec.slope;
    return verdict;
  }
  verdict.holds = false;
  PropertyYFailure failure;
  failure.k = *margin + 1;
  failure.spine_witness = true;
  failure.exact = true;
  failure.max_margin = *margin;
  verdict.failure = failure;
  return verdict;
}

WitnessResult property_y_witness(const Graph& g, const LassoPath& x, long long k,
                                 const YOptions& opts) {
  g.require_simple("property_y_witness");
  if (k < 0) fail(ErrorKind::InvalidInput, "degree k must be nonnegative");
  if (!has_infinite_path(g))
    fail(ErrorKind::NoInfinitePath, "graph admits no infinite path");
  validate_lasso(g, x);

  const long long min_n = opts.allow_empty_prefix ? 0 : 1;
  if (k == 0) {
    // beta = alpha satisfies the requirement on the nose.
    long long n = std::max<long long>(min_n, opts.allow_empty_prefix ? 0 : 1);
    Path beta = n == 0 ? Path::at_vertex(lasso_vertex(g, x, 0))
                       : Path::from_edges(g, {lasso_edge(x, 1)});
    return WitnessFound{n, beta};
  }

  LengthProfile profile = length_profiles(g);
  const long long P = x.prefix.length();
  const long long C = x.cycle.length();
  const long long l = std::lcm<long long>(C, profile.period);
  const long long covering = std::max<long long>(P, profile.preperiod) + l;
  const long long stated = std::max<long long>(
      {covering, (profile.preperiod + l) * g.vertex_count(),
       static_cast<long long>(profile.preperiod + profile.period) * g.vertex_count() + 1});

  for (long long n = min_n; n <= stated; ++n) {
    int v = lasso_vertex(g, x, n);
    if (profile.member(v, n + k)) {
      auto beta = path_of_length(g, v, n + k);
      if (!beta) fail(ErrorKind::InvalidInput, "internal: member without witness path");
      return WitnessFound{n, *beta};
    }
  }
  return ExhaustedProof{stated, false, std::nullopt};
}

bool ladder_member(const LadderSpec& spec, long long n, long long m) {
  // m in L(v_n) iff some j <= n admits n - j <= m <= n - j + b_j.
  for (long long j = std::max<long long>(0, n - m); j <= n; ++j)
    if (spec.branch_len(j) >= j + (m - n)) return true;
  return false;
}

namespace {

// Least j with b_j - j >= need, or nullopt when the margin never reaches it.
std::optional<long long> least_stage_with_margin(const LadderSpec& spec, long long need) {
  long long t = static_cast<long long>(spec.table.size());
  for (long long j = 0; j < t; ++j)
    if (spec.branch_len(j) - j >= need) return j;
  if (spec.slope >= 2) {
    // Tail margin (slope-1)*j + offset is increasing; solve for the least j.
    long long lo = t;
    long long a = spec.slope - 1;
    long long num = need - spec.offset;
    long long j0 = num <= 0 ? lo : std::max(lo, (num + a - 1) / a);
    while (spec.branch_len(j0) - j0 < need) ++j0;  // guard the max(0, .) clamp
    return j0;
  }
  if (spec.branch_len(t) - t >= need) return t;
  return std::nullopt;
}

}  // namespace

LadderWitnessResult ladder_property_y_witness(const LadderSpec& spec, long long stage,
                                              long long k, const YOptions& opts) {
  spec.validate();
  if (k < 0 || stage < 0) fail(ErrorKind::InvalidInput, "stage and k must be nonnegative");
  const long long min_n = opts.allow_empty_prefix ? 0 : 1;
  if (k == 0) {
    LadderWitnessFound found;
    found.n = min_n;
    if (min_n == 1) found.beta_edge_ids.push_back(ladder_spine_edge_id(stage + 1));
    return found;
  }

  // Along the spine from v_stage, a prefix of length n ends at v_{stage+n} and
  // needs a path of length n + k there; that exists iff some stage j with
  // j >= stage - k has margin b_j - j >= k - stage.
  // Only stages j >= stage - k are usable (the backtrack may not exceed n + k).
  std::optional<long long> j_star;
  if (k <= stage) {
    j_star = stage - k;  // pure spine-backward witness, always available
  } else {
    j_star = least_stage_with_margin(spec, k - stage);
  }
  if (!j_star) {
    auto margin = spec.max_branch_margin();
    return ExhaustedProof{0, true, margin ? std::optional<long long>(*margin + stage) : std::nullopt};
  }

  long long n = std::max<long long>(min_n, *j_star - stage);
  long long N = stage + n;           // vertex v_N carries the witness
  long long back = N - *j_star;      // spine steps back to v_{j*}
  long long climb = (n + k) - back;  // branch edges climbed at v_{j*}
  LadderWitnessFound found;
  found.n = n;
  for (long long i = climb; i >= 1; --i)
    found.beta_edge_ids.push_back(ladder_branch_edge_id(*j_star, i));
  for (long long j = *j_star + 1; j <= N; ++j)
    found.beta_edge_ids.push_back(ladder_spine_edge_id(j));
  return found;
}

StronglyGradedReport decide_strongly_graded(const Graph& g, const YOptions& opts) {
  StronglyGradedReport report;
  report.is_ladder = false;
  StructuralReport structure = structural_report(g);
  report.row_finite = structure.row_finite;
  for (int v : structure.sources) report.sources.push_back(g.vertex_id(v));
  report.property_y = decide_property_y(g, opts);
  report.strongly_graded =
      report.row_finite && report.sources.empty() && report.property_y.holds;
  return report;
}

StronglyGradedReport decide_strongly_graded(const LadderSpec& spec, const YOptions& opts) {
  StronglyGradedReport report;
  report.is_ladder = true;
  report.row_finite = true;  // every vertex receives exactly one edge
  report.property_y = decide_property_y(spec, opts);
  report.strongly_graded = report.property_y.holds;
  return report;
}

}  // namespace lpa
