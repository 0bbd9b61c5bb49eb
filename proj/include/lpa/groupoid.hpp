#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/lasso.hpp"
#include "lpa/lengths.hpp"
#include "lpa/witness.hpp"

namespace lpa {

// Boundary-path calculus over row-finite source-free graphs, on the lasso
// (eventually periodic) points, plus the ladder spine family. Degree
// convention: (x, k, y) with x = mu.w, y = nu.w and k = |mu| - |nu|, matching
// deg [mu|nu] = |mu| - |nu| so the word <-> bisection dictionary preserves
// degrees on the nose.

/// Rejects graphs whose boundary is not the infinite-path space.
void require_boundary_supported(const Graph& g);

/// Canonical representative: primitive cycle, minimal prefix (common tail
/// absorbed into the cycle). Two lassos denote the same infinite path iff
/// their canonical forms are equal.
LassoPath lasso_canonicalize(const Graph& g, const LassoPath& x);

/// sigma^t x, canonical.
LassoPath lasso_shift(const Graph& g, const LassoPath& x, long long t);

bool lasso_starts_with(const Graph& g, const LassoPath& x, const Path& p);

struct GroupoidElement {
  LassoPath x;
  long long k = 0;
  LassoPath y;
  long long n = 0;  // minimal alignment: sigma^n x = sigma^m y, n - m = k
  long long m = 0;

  bool operator==(const GroupoidElement&) const = default;
};

enum class ElementOutcome { Valid, LagMismatch, TailsNotEquivalent };

struct ElementValidation {
  ElementOutcome outcome = ElementOutcome::Valid;
  std::optional<GroupoidElement> element;
};

ElementValidation element_validate(const Graph& g, const LassoPath& x, long long k,
                                   const LassoPath& y);

GroupoidElement groupoid_unit(const Graph& g, const LassoPath& x);
GroupoidElement groupoid_inverse(const Graph& g, const GroupoidElement& e);
/// (x,k,y).(y,l,z) = (x,k+l,z); the middle terms must match exactly.
GroupoidElement groupoid_compose(const Graph& g, const GroupoidElement& a,
                                 const GroupoidElement& b);

/// Z(alpha, beta) with s(alpha) = s(beta); degree cocycle |alpha| - |beta|.
struct CylinderBisection {
  Path alpha;
  Path beta;

  long long degree() const { return alpha.length() - beta.length(); }
  bool operator==(const CylinderBisection&) const = default;
};

CylinderBisection make_bisection(const Graph& g, Path alpha, Path beta);

/// Z(alpha,beta) . Z(gamma,delta): Z(alpha gamma', delta) when gamma = beta
/// gamma', Z(alpha, delta beta') when beta = gamma beta', empty otherwise.
std::optional<CylinderBisection> bisection_product(const Graph& g, const CylinderBisection& b,
                                                   const CylinderBisection& d);

bool element_in_bisection(const Graph& g, const GroupoidElement& e, const CylinderBisection& b);

/// Value at a groupoid point of the function corresponding to an element
/// under [alpha|beta] <-> indicator of Z(alpha,beta).
Rational element_value_at(const LpaElement& f, const GroupoidElement& point);

/// Does mono_mul agree with bisection_product under the dictionary
/// (zero <-> empty), including the degree cocycle?
bool steinberg_product_check(const Graph& g, const Monomial& m1, const Monomial& m2);

struct GroupoidFactorPair {
  GroupoidElement left;
  GroupoidElement right;
};

using GroupoidFactorResult = std::variant<GroupoidFactorPair, ExhaustedProof>;

/// Factors a degree-0 element through degree +-k. Direction (+k,-k) always
/// succeeds (shift trick); direction (-k,+k) needs a property-(Y)-style
/// witness along x and reports ExhaustedProof when the search is out.
GroupoidFactorResult factor_element(const Graph& g, const GroupoidElement& e, long long k,
                                    FactorDirection dir, const YOptions& opts = {});

// --- Ladder spine counterpart ------------------------------------------

/// Boundary point of the infinite ladder: a finite prefix followed by the
/// spine from v_stage. Canonical form absorbs trailing spine edges of the
/// prefix into the stage. This represents every boundary point exactly.
struct LadderBoundary {
  std::vector<std::string> prefix_edge_ids;
  long long stage = 0;

  long long phase() const { return stage - static_cast<long long>(prefix_edge_ids.size()); }
  bool operator==(const LadderBoundary&) const = default;
};

LadderBoundary ladder_canonicalize(const LadderSpec& spec, LadderBoundary x);
LadderBoundary ladder_shift(const LadderSpec& spec, const LadderBoundary& x, long long t);

struct LadderGroupoidElement {
  LadderBoundary x;
  long long k = 0;
  LadderBoundary y;

  bool operator==(const LadderGroupoidElement&) const = default;
};

/// All ladder boundary points share one tail class; validity is k = phase(y)
/// - phase(x).
ElementOutcome ladder_element_validate(const LadderSpec& spec, const LadderBoundary& x,
                                       long long k, const LadderBoundary& y);

struct LadderFactorPair {
  LadderGroupoidElement left;
  LadderGroupoidElement right;
};

using LadderFactorResult = std::variant<LadderFactorPair, ExhaustedProof>;

LadderFactorResult ladder_factor_element(const LadderSpec& spec, const LadderGroupoidElement& e,
                                         long long k, FactorDirection dir,
                                         const YOptions& opts = {});

}  // namespace lpa
