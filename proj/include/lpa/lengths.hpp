#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/lasso.hpp"

namespace lpa {

/// Eventually periodic table of the length sets L(v) = {l : some path beta
/// has s(beta) = v, |beta| = l}, computed from the boolean recurrence
/// w_0 = 1, w_{l+1}(v) = OR over e in s^{-1}(v) of w_l(r(e)).
struct LengthProfile {
  int preperiod = 0;  // p
  int period = 1;     // c >= 1
  std::vector<std::vector<char>> table;  // levels 0 .. p+c-1

  long long fold(long long m) const {
    long long span = preperiod + period;
    return m < span ? m : preperiod + (m - preperiod) % period;
  }
  bool member(int v, long long m) const {
    return table[static_cast<std::size_t>(fold(m))][static_cast<std::size_t>(v)] != 0;
  }
};

/// Minimal (p, c) by first repeat of the boolean vector sequence.
/// Omega edges are fine here; multiplicity never affects reachability.
LengthProfile length_profiles(const Graph& g);

/// Lexicographically least (by enumeration, range end first) path beta with
/// s(beta) = v and |beta| = len, or nullopt.
std::optional<Path> path_of_length(const Graph& g, int v, long long len);

struct YOptions {
  bool allow_empty_prefix = false;  // permit |alpha| = 0 in property (Y)
};

struct PropertyYFailure {
  long long k = 1;
  std::optional<LassoPath> lasso;         // finite-graph witness walk
  bool spine_witness = false;             // ladder spine witness
  long long bound = 0;                    // prefix lengths checked
  bool exact = false;                     // ladder closed form, not just a bound
  std::optional<long long> max_margin;    // ladder: max_j (b_j - j)
};

struct PropertyYVerdict {
  bool holds = true;
  // success evidence
  long long checked_k_max = 0;            // finite graphs: k = 1..p+c covered
  int preperiod = 0;
  int period = 1;
  std::optional<long long> slope;         // ladders: realizing slope
  std::optional<PropertyYFailure> failure;
};

PropertyYVerdict decide_property_y(const Graph& g, const YOptions& opts = {});
PropertyYVerdict decide_property_y(const LadderSpec& spec, const YOptions& opts = {});

struct WitnessFound {
  long long n = 0;
  Path beta;  // on the graph the query ran against
};

struct LadderWitnessFound {
  long long n = 0;
  std::vector<std::string> beta_edge_ids;  // ids under the ladder naming scheme
};

struct ExhaustedProof {
  long long bound = 0;  // all prefix lengths n <= bound were checked
  bool exact = false;   // ladder closed form: nonexistence for every n
  std::optional<long long> max_margin;
};

using WitnessResult = std::variant<WitnessFound, ExhaustedProof>;
using LadderWitnessResult = std::variant<LadderWitnessFound, ExhaustedProof>;

/// Searches for (n, beta) with s(beta) = s(x_{<=n}) and |beta| = n + k.
/// Throws NoInfinitePath when the graph has no infinite path at all,
/// InvalidLasso when x is not a valid lasso of g.
WitnessResult property_y_witness(const Graph& g, const LassoPath& x, long long k,
                                 const YOptions& opts = {});

/// Same question along the ladder spine starting at v_stage.
LadderWitnessResult ladder_property_y_witness(const LadderSpec& spec, long long stage,
                                              long long k, const YOptions& opts = {});

/// Closed-form membership m in L(v_n) for the infinite ladder.
bool ladder_member(const LadderSpec& spec, long long n, long long m);

struct StronglyGradedReport {
  bool strongly_graded = false;
  bool is_ladder = false;
  bool row_finite = true;
  std::vector<std::string> sources;  // offending vertices, if any
  PropertyYVerdict property_y;
};

/// Conjunction of the three clauses (row-finite, no sources, property (Y)).
/// The verdict covers both the Leavitt path algebra and the graph
/// C*-algebra; the C*-side is theorem-derived, never computed analytically.
StronglyGradedReport decide_strongly_graded(const Graph& g, const YOptions& opts = {});
StronglyGradedReport decide_strongly_graded(const LadderSpec& spec, const YOptions& opts = {});

}  // namespace lpa
