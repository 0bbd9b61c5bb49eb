#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lpa/graph.hpp"
#include "lpa/rational.hpp"

namespace lpa {

/// The spanning word alpha beta* with s(alpha) = s(beta).
struct Monomial {
  Path alpha;
  Path beta;

  long long degree() const { return alpha.length() - beta.length(); }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

void validate_path(const Graph& g, const Path& p);
/// Checks leg validity and the common-source invariant s(alpha) = s(beta).
void validate_monomial(const Graph& g, const Monomial& m);

std::string monomial_to_string(const Graph& g, const Monomial& m);

/// (alpha beta*)(gamma delta*) = (alpha gamma') delta*  when gamma = beta gamma',
///                               alpha (delta beta')*   when beta = gamma beta',
///                               0                      otherwise.
std::optional<Monomial> mono_mul(const Graph& g, const Monomial& m1, const Monomial& m2);

using RawElement = std::vector<std::pair<Monomial, Rational>>;

/// Record of one rewriting pass, for the termination measure test.
struct ReductionTrace {
  struct Step {
    int size_before = 0;                          // |alpha| + |beta| of the redex
    int shrunk_size = 0;                          // size of the collapsed word
    std::vector<std::pair<int, bool>> emitted;    // (size, irreducible) of siblings
  };
  std::vector<Step> steps;
};

/// Exact element of L_Q(E) in canonical normal form: no stored word has both
/// legs ending in the special edge of a regular vertex, and no coefficient
/// is zero. Elements bind to a graph; cross-graph arithmetic is an error.
class LpaElement {
 public:
  LpaElement() = default;
  explicit LpaElement(GraphPtr graph) : graph_(std::move(graph)) {}

  static LpaElement from_terms(GraphPtr graph, const RawElement& terms,
                               std::uint64_t seed = 0, ReductionTrace* trace = nullptr);
  static LpaElement vertex_unit(GraphPtr graph, int v);
  static LpaElement monomial(GraphPtr graph, Monomial m, Rational coeff = 1);

  const GraphPtr& graph() const { return graph_; }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Degree when homogeneous (zero reports degree 0); nullopt when mixed.
  std::optional<long long> homogeneous_degree() const;

  bool operator==(const LpaElement& other) const;

 private:
  GraphPtr graph_;
  std::map<Monomial, Rational> terms_;

  friend LpaElement normal_form(GraphPtr graph, const RawElement& raw, std::uint64_t seed,
                                ReductionTrace* trace);
};

/// Exhaustive application of the collapse rule
///   (a'f)(b'f)* -> a'b'* - sum over g in r^{-1}(w), g != f, of (a'g)(b'g)*
/// where f is the special edge of the regular vertex w = r(f). The seed picks
/// the reduction order; the result is order-independent.
LpaElement normal_form(GraphPtr graph, const RawElement& raw, std::uint64_t seed = 0,
                       ReductionTrace* trace = nullptr);

void require_same_graph(const LpaElement& x, const LpaElement& y);

LpaElement add(const LpaElement& x, const LpaElement& y);
LpaElement subtract(const LpaElement& x, const LpaElement& y);
LpaElement scale(const Rational& c, const LpaElement& x);
LpaElement multiply(const LpaElement& x, const LpaElement& y);
LpaElement star(const LpaElement& x);

inline LpaElement operator+(const LpaElement& x, const LpaElement& y) { return add(x, y); }
inline LpaElement operator-(const LpaElement& x, const LpaElement& y) { return subtract(x, y); }
inline LpaElement operator*(const LpaElement& x, const LpaElement& y) { return multiply(x, y); }
inline LpaElement operator*(const Rational& c, const LpaElement& x) { return scale(c, x); }

/// Partition of the normal form by |alpha| - |beta|.
std::map<long long, LpaElement> grade_decompose(const LpaElement& x);

std::string element_to_string(const LpaElement& x);

/// Renders a raw sum term-by-term in the given order, without normalizing.
std::string raw_to_string(const Graph& g, const RawElement& raw);

}  // namespace lpa
