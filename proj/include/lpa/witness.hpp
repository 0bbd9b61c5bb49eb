#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/lengths.hpp"

namespace lpa {

/// Split orientation for factorizations through degree +-k.
enum class FactorDirection { PosNeg, NegPos };  // (+k,-k) vs (-k,+k)

FactorDirection parse_direction(const std::string& text);      // "pos-neg" | "neg-pos"
std::string direction_to_string(FactorDirection dir);

struct FactorizationWitness {
  LpaElement target;
  long long deg_left = 0;
  long long deg_right = 0;
  std::vector<std::pair<LpaElement, LpaElement>> pairs;
  long long level = 0;  // search level m (expansion depth for pos-neg)
};

/// Bounded-search miss; a claim about levels <= max_level, not nonexistence.
struct NotFoundUpTo {
  long long max_level = 0;
  std::string note;
};

using FactorResult = std::variant<FactorizationWitness, NotFoundUpTo>;

/// Factorizes the local unit p_v into homogeneous pairs of degrees
/// (+k,-k) or (-k,+k). The pos-neg direction expands p_v through iterated
/// Cuntz-Krieger collapses and throws IrregularVertexOnExpansion when a
/// source blocks the expansion cone; the neg-pos direction searches levels
/// m = 0..max_level for one where every path alpha of length m into v admits
/// a companion of length m+k from s(alpha).
FactorResult factor_local_unit(GraphPtr graph, int v, long long k, FactorDirection dir,
                               long long max_level);

/// Default level cap used when a caller passes max_level < 0.
long long default_level_bound(const Graph& g);

/// Factorizes a homogeneous element of degree a+b into pairs of degrees
/// (a, b) by splitting local units at the sources of its words. Irregular
/// expansion obstructions surface as NotFoundUpTo with a note.
FactorResult factor_homogeneous(const LpaElement& x, long long a, long long b,
                                long long max_level);

/// Recomputes sum x_i y_i and the homogeneity of every factor.
bool verify_factorization(const FactorizationWitness& w);

}  // namespace lpa
