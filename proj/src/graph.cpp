#include "lpa/graph.hpp"

#include <algorithm>
#include <set>

namespace lpa {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DanglingEndpoint: return "DanglingEndpoint";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::OmegaEdgesUnsupported: return "OmegaEdgesUnsupported";
    case ErrorKind::GraphMismatch: return "GraphMismatch";
    case ErrorKind::IrregularVertexOnExpansion: return "IrregularVertexOnExpansion";
    case ErrorKind::NotDegreeZero: return "NotDegreeZero";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::SourceMismatch: return "SourceMismatch";
    case ErrorKind::InvalidLasso: return "InvalidLasso";
    case ErrorKind::NotComposableTails: return "NotComposableTails";
    case ErrorKind::NoInfinitePath: return "NoInfinitePath";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::SyntaxError: return "SyntaxError";
  }
  return "UnknownError";
}

Graph Graph::validate(const GraphInput& input) {
  Graph g;
  g.vertices_ = input.vertices;
  for (int v = 0; v < static_cast<int>(g.vertices_.size()); ++v) {
    auto [it, fresh] = g.vertex_index_.emplace(g.vertices_[v], v);
    (void)it;
    if (!fresh) fail(ErrorKind::DuplicateId, "vertex '" + g.vertices_[v] + "' declared twice");
  }

  std::unordered_map<std::string, int> edge_input_index;
  for (const EdgeSpec& spec : input.edges) {
    if (spec.multiplicity != kOmega && spec.multiplicity < 1)
      fail(ErrorKind::InvalidInput, "edge '" + spec.id + "' has multiplicity " +
                                        std::to_string(spec.multiplicity));
    auto r = g.vertex_index_.find(spec.range);
    if (r == g.vertex_index_.end())
      fail(ErrorKind::DanglingEndpoint, "edge '" + spec.id + "' names unknown range vertex '" + spec.range + "'");
    auto s = g.vertex_index_.find(spec.source);
    if (s == g.vertex_index_.end())
      fail(ErrorKind::DanglingEndpoint, "edge '" + spec.id + "' names unknown source vertex '" + spec.source + "'");
    auto [it, fresh] = edge_input_index.emplace(spec.id, static_cast<int>(g.edges_.size()));
    (void)it;
    if (!fresh) fail(ErrorKind::DuplicateId, "edge '" + spec.id + "' declared twice");
    g.edges_.push_back(Edge{spec.id, r->second, s->second, spec.multiplicity});
  }

  if (input.enumeration.empty()) {
    g.enumeration_.resize(g.edges_.size());
    for (std::size_t i = 0; i < g.edges_.size(); ++i) g.enumeration_[i] = static_cast<int>(i);
  } else {
    if (input.enumeration.size() != g.edges_.size())
      fail(ErrorKind::InvalidInput, "enumeration must list every edge exactly once");
    std::set<int> seen;
    for (const std::string& id : input.enumeration) {
      auto it = edge_input_index.find(id);
      if (it == edge_input_index.end())
        fail(ErrorKind::UnknownId, "enumeration names unknown edge '" + id + "'");
      if (!seen.insert(it->second).second)
        fail(ErrorKind::DuplicateId, "enumeration repeats edge '" + id + "'");
      g.enumeration_.push_back(it->second);
    }
  }

  g.receivers_.resize(g.vertices_.size());
  g.emitters_.resize(g.vertices_.size());
  for (int pos = 0; pos < static_cast<int>(g.enumeration_.size()); ++pos) {
    const Edge& e = g.edges_[g.enumeration_[pos]];
    g.receivers_[e.range].push_back(pos);
    g.emitters_[e.source].push_back(pos);
    g.edge_pos_[e.id] = pos;
  }
  return g;
}

std::optional<int> Graph::find_vertex(const std::string& id) const {
  auto it = vertex_index_.find(id);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Graph::find_edge_pos(const std::string& id) const {
  auto it = edge_pos_.find(id);
  if (it == edge_pos_.end()) return std::nullopt;
  return it->second;
}

bool Graph::has_omega_edges() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.multiplicity == kOmega; });
}

bool Graph::has_parallel_multiplicities() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.multiplicity >= 2; });
}

void Graph::require_simple(const char* where) const {
  if (has_omega_edges())
    fail(ErrorKind::OmegaEdgesUnsupported, std::string(where) + " requires a graph without omega edges");
  if (has_parallel_multiplicities())
    fail(ErrorKind::OmegaEdgesUnsupported,
         std::string(where) +
             " requires individually named edges; declare parallel edges one by one "
             "instead of using multiplicities >= 2");
}

Path Path::from_edges(const Graph& g, const std::vector<int>& positions) {
  if (positions.empty()) fail(ErrorKind::InvalidInput, "edge path needs at least one edge");
  Path p;
  p.range_vertex = g.edge_range(positions.front());
  p.edges = positions;
  for (std::size_t i = 0; i + 1 < positions.size(); ++i) {
    if (g.edge_source(positions[i]) != g.edge_range(positions[i + 1]))
      fail(ErrorKind::NotComposable,
           "edges '" + g.edge_id(positions[i]) + "' and '" + g.edge_id(positions[i + 1]) +
               "' do not compose");
  }
  return p;
}

Path compose(const Graph& g, const Path& a, const Path& b) {
  if (a.source(g) != b.range())
    fail(ErrorKind::NotComposable, "paths do not compose: source '" +
                                       g.vertex_id(a.source(g)) + "' vs range '" +
                                       g.vertex_id(b.range()) + "'");
  if (a.edges.empty()) return b;
  Path out = a;
  out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
  return out;
}

bool starts_with(const Graph& g, const Path& p, const Path& prefix) {
  if (prefix.edges.empty()) {
    // A vertex path is a prefix exactly when it anchors at the same range.
    (void)g;
    return p.range_vertex == prefix.range_vertex;
  }
  if (prefix.edges.size() > p.edges.size()) return false;
  return std::equal(prefix.edges.begin(), prefix.edges.end(), p.edges.begin());
}

std::string path_to_string(const Graph& g, const Path& p) {
  if (p.edges.empty()) return g.vertex_id(p.range_vertex);
  std::string out;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    if (i) out += ' ';
    out += g.edge_id(p.edges[i]);
  }
  return out;
}

std::vector<int> step_successors(const Graph& g, int v) {
  std::vector<int> succ;
  for (int pos : g.receivers(v)) {
    int w = g.edge_source(pos);
    if (std::find(succ.begin(), succ.end(), w) == succ.end()) succ.push_back(w);
  }
  return succ;
}

namespace {

// Iterative Tarjan over the step digraph.
std::vector<std::vector<int>> step_digraph_sccs(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> sccs;
  int next_index = 0;

  struct Frame {
    int v;
    std::vector<int> succ;
    std::size_t next = 0;
  };

  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames;
    frames.push_back({root, step_successors(g, root)});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next < f.succ.size()) {
        int w = f.succ[f.next++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, step_successors(g, w)});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          std::vector<int> component;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            component.push_back(w);
            if (w == f.v) break;
          }
          std::sort(component.begin(), component.end());
          sccs.push_back(std::move(component));
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  std::sort(sccs.begin(), sccs.end());
  return sccs;
}

}  // namespace

StructuralReport structural_report(const Graph& g) {
  StructuralReport report;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.receivers(v).empty()) report.sources.push_back(v);
    if (g.emitters(v).empty()) report.emitters_empty.push_back(v);
    for (int pos : g.receivers(v)) {
      if (g.edge_multiplicity(pos) == kOmega) report.row_finite = false;
    }
  }
  report.scc = step_digraph_sccs(g);
  return report;
}

bool has_infinite_path(const Graph& g) {
  // A cycle in the step digraph is exactly a closed path of the graph.
  for (const auto& component : step_digraph_sccs(g)) {
    if (component.size() >= 2) return true;
    int v = component.front();
    for (int w : step_successors(g, v))
      if (w == v) return true;
  }
  return false;
}

std::vector<Path> enumerate_paths(const Graph& g, int k, int J, std::optional<int> source) {
  g.require_simple("enumerate_paths");
  if (k < 0 || J < 0) fail(ErrorKind::InvalidInput, "k and J must be nonnegative");
  J = std::min(J, g.edge_count());

  std::vector<Path> out;
  if (k == 0) {
    std::vector<char> seen(g.vertex_count(), 0);
    for (int pos = 0; pos < J; ++pos) {
      int v = g.edge_source(pos);
      if (seen[v]) continue;
      seen[v] = 1;
      if (!source || *source == v) out.push_back(Path::at_vertex(v));
    }
    return out;
  }

  // Depth-first in enumeration order yields lexicographic output.
  std::vector<int> acc;
  auto extend = [&](auto&& self, int depth) -> void {
    if (depth == k) {
      Path p;
      p.range_vertex = g.edge_range(acc.front());
      p.edges = acc;
      if (!source || p.source(g) == *source) out.push_back(std::move(p));
      return;
    }
    if (depth == 0) {
      for (int pos = 0; pos < J; ++pos) {
        acc.push_back(pos);
        self(self, depth + 1);
        acc.pop_back();
      }
    } else {
      // alpha_{i+1} must satisfy r(alpha_{i+1}) = s(alpha_i).
      int at = g.edge_source(acc.back());
      for (int pos : g.receivers(at)) {
        if (pos >= J) continue;
        acc.push_back(pos);
        self(self, depth + 1);
        acc.pop_back();
      }
    }
  };
  extend(extend, 0);
  return out;
}

long long LadderSpec::branch_len(long long j) const {
  if (j < static_cast<long long>(table.size())) return table[static_cast<std::size_t>(j)];
  long long b = slope * j + offset;
  return b < 0 ? 0 : b;
}

void LadderSpec::validate() const {
  for (long long b : table)
    if (b < 0) fail(ErrorKind::InvalidInput, "ladder table entries must be nonnegative");
  if (slope < 0) fail(ErrorKind::InvalidInput, "ladder slope must be nonnegative");
}

std::optional<long long> LadderSpec::max_branch_margin() const {
  if (slope >= 2) return std::nullopt;
  // For slope <= 1 the tail margin max(0, slope*j + offset) - j is
  // nonincreasing from j = t on, so the max is over the table plus b_t - t.
  long long t = static_cast<long long>(table.size());
  long long best = branch_len(t) - t;
  for (long long j = 0; j < t; ++j) best = std::max(best, branch_len(j) - j);
  return best;
}

std::string ladder_vertex_id(long long j) { return "v" + std::to_string(j); }
std::string ladder_branch_vertex_id(long long j, long long i) {
  return "u" + std::to_string(j) + "_" + std::to_string(i);
}
std::string ladder_spine_edge_id(long long j) { return "s" + std::to_string(j); }
std::string ladder_branch_edge_id(long long j, long long i) {
  return "c" + std::to_string(j) + "_" + std::to_string(i);
}

Graph ladder_instantiate(const LadderSpec& spec, long long N) {
  spec.validate();
  if (N < 0) fail(ErrorKind::InvalidInput, "truncation stage must be nonnegative");
  GraphInput input;
  for (long long j = 0; j <= N; ++j) {
    input.vertices.push_back(ladder_vertex_id(j));
    for (long long i = 1; i <= spec.branch_len(j); ++i)
      input.vertices.push_back(ladder_branch_vertex_id(j, i));
  }
  // Stage order: branches at v_0, then s_1, branches at v_1, s_2, ...
  for (long long j = 0; j <= N; ++j) {
    if (j >= 1)
      input.edges.push_back(EdgeSpec{ladder_spine_edge_id(j), ladder_vertex_id(j - 1),
                                     ladder_vertex_id(j), 1});
    for (long long i = 1; i <= spec.branch_len(j); ++i) {
      std::string from = i == 1 ? ladder_vertex_id(j) : ladder_branch_vertex_id(j, i - 1);
      input.edges.push_back(
          EdgeSpec{ladder_branch_edge_id(j, i), ladder_branch_vertex_id(j, i), from, 1});
    }
  }
  return Graph::validate(input);
}

}  // namespace lpa
