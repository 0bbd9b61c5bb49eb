#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lpa/errors.hpp"

namespace lpa {

/// Edge multiplicity: 1, 2, ... or kOmega for infinitely many parallel edges.
inline constexpr long long kOmega = -1;

struct EdgeSpec {
  std::string id;
  std::string range;
  std::string source;
  long long multiplicity = 1;
};

/// Raw, unvalidated graph description (as read from JSON or built in code).
struct GraphInput {
  std::vector<std::string> vertices;
  std::vector<EdgeSpec> edges;
  std::vector<std::string> enumeration;  // optional; empty = input order
};

struct Edge {
  std::string id;
  int range = -1;
  int source = -1;
  long long multiplicity = 1;

  bool operator==(const Edge&) const = default;
};

/// Validated directed graph. Edges carry a fixed enumeration e_1, e_2, ...
/// which every downstream construction (E^k_J, special edges, lexicographic
/// witnesses) depends on. Throughout the library edges are addressed by their
/// 0-based *enumeration position*.
class Graph {
 public:
  static Graph validate(const GraphInput& input);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::string& vertex_id(int v) const { return vertices_[v]; }
  std::optional<int> find_vertex(const std::string& id) const;
  std::optional<int> find_edge_pos(const std::string& id) const;

  // Edge accessors by enumeration position (0-based; e_{t+1} in math terms).
  const Edge& edge_at(int pos) const { return edges_[enumeration_[pos]]; }
  int edge_range(int pos) const { return edge_at(pos).range; }
  int edge_source(int pos) const { return edge_at(pos).source; }
  const std::string& edge_id(int pos) const { return edge_at(pos).id; }
  long long edge_multiplicity(int pos) const { return edge_at(pos).multiplicity; }

  /// r^{-1}(v) as enumeration positions, ascending.
  const std::vector<int>& receivers(int v) const { return receivers_[v]; }
  /// s^{-1}(v) as enumeration positions, ascending.
  const std::vector<int>& emitters(int v) const { return emitters_[v]; }

  /// The special edge of a regular vertex: earliest receiver in enumeration.
  int special_edge(int v) const { return receivers_[v].empty() ? -1 : receivers_[v].front(); }

  bool has_omega_edges() const;
  bool has_parallel_multiplicities() const;  // any finite multiplicity >= 2
  /// Rejects graphs whose edges cannot be addressed individually by id.
  void require_simple(const char* where) const;

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges_in_input_order() const { return edges_; }
  const std::vector<int>& enumeration() const { return enumeration_; }

  bool operator==(const Graph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_ &&
           enumeration_ == other.enumeration_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;        // input order
  std::vector<int> enumeration_;   // enumeration_[pos] = index into edges_
  std::vector<std::vector<int>> receivers_;
  std::vector<std::vector<int>> emitters_;
  std::unordered_map<std::string, int> vertex_index_;
  std::unordered_map<std::string, int> edge_pos_;
};

using GraphPtr = std::shared_ptr<const Graph>;

/// A finite path: a vertex (length 0) or a composable edge sequence
/// alpha_1...alpha_n listed range-to-source, i.e. s(alpha_i) = r(alpha_{i+1}).
/// Edges are enumeration positions so comparisons follow the enumeration.
struct Path {
  int range_vertex = -1;
  std::vector<int> edges;

  static Path at_vertex(int v) { return Path{v, {}}; }
  static Path from_edges(const Graph& g, const std::vector<int>& positions);

  int length() const { return static_cast<int>(edges.size()); }
  int range() const { return range_vertex; }
  int source(const Graph& g) const {
    return edges.empty() ? range_vertex : g.edge_source(edges.back());
  }

  auto operator<=>(const Path&) const = default;
  bool operator==(const Path&) const = default;
};

/// alpha . beta, defined when s(alpha) = r(beta).
Path compose(const Graph& g, const Path& a, const Path& b);

/// True when `p` starts with `prefix` (prefix of the edge list; a vertex
/// path is a prefix of anything anchored at that vertex).
bool starts_with(const Graph& g, const Path& p, const Path& prefix);

std::string path_to_string(const Graph& g, const Path& p);

struct StructuralReport {
  bool row_finite = true;
  std::vector<int> sources;          // r^{-1}(v) empty
  std::vector<int> emitters_empty;   // s^{-1}(v) empty
  std::vector<std::vector<int>> scc; // components of the step digraph D
};

/// Row-finiteness, sources, and SCCs of the step digraph D
/// (u -> w iff some edge has r = u, s = w).
StructuralReport structural_report(const Graph& g);

/// Step-digraph successors of v: {s(e) : e in r^{-1}(v)}, deduplicated,
/// in enumeration order of the witnessing edge.
std::vector<int> step_successors(const Graph& g, int v);

/// True when the graph admits an infinite path (its step digraph has a cycle).
bool has_infinite_path(const Graph& g);

/// E^k_J, optionally restricted to paths with source v. Lexicographic in the
/// enumeration. For k = 0 this is E^0_J = {s(e_j) : j <= J} as vertex paths,
/// ordered by first witnessing edge.
std::vector<Path> enumerate_paths(const Graph& g, int k, int J,
                                  std::optional<int> source = std::nullopt);

/// Finitely presented infinite graph: spine v_0, v_1, ... with a branch of
/// length b_j hanging off v_j, where b_j comes from an explicit table followed
/// by the affine tail b_j = max(0, slope*j + offset).
struct LadderSpec {
  std::vector<long long> table;
  long long slope = 0;
  long long offset = 0;

  long long branch_len(long long j) const;
  void validate() const;

  /// max_j (b_j - j), or nullopt when the sup is infinite (slope >= 2).
  std::optional<long long> max_branch_margin() const;

  bool operator==(const LadderSpec&) const = default;
};

// Naming convention used by ladder_instantiate (and by spine witnesses).
std::string ladder_vertex_id(long long j);
std::string ladder_branch_vertex_id(long long j, long long i);
std::string ladder_spine_edge_id(long long j);
std::string ladder_branch_edge_id(long long j, long long i);

/// The finite subgraph on stages j <= N: spine through v_N plus the branches
/// at v_0..v_N. Note v_N receives no edge in the truncation (the finite
/// subgraph is acyclic, so it necessarily has a source); all other vertices do.
Graph ladder_instantiate(const LadderSpec& spec, long long N);

/// Either a finite graph or a ladder preset, as read from graph JSON.
struct GraphOrLadder {
  std::optional<Graph> graph;
  std::optional<LadderSpec> ladder;

  bool is_ladder() const { return ladder.has_value(); }
};

}  // namespace lpa
