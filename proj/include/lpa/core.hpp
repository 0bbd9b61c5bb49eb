#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/linalg.hpp"

namespace lpa {

/// The system m_{alpha beta} = [alpha|beta] over the index set E^k_J v,
/// with the full multiplication-relation check attached.
struct MatrixUnitSystem {
  int k = 0;
  int J = 0;
  int vertex = -1;
  std::vector<Path> index;  // E^k_J v, lexicographic
  bool relations_ok = false;
  long long products_checked = 0;
};

MatrixUnitSystem matrix_units(GraphPtr graph, int k, int J, int v);

/// Spanning words of F_{k,J}: [alpha|beta] with alpha, beta in E^l_J v,
/// l <= k, v in E^0_J. Deterministic order (l, then v, then legs).
std::vector<Monomial> spanning_monomials(const Graph& g, int k, int J);

/// dim F_{k,J} by exact elimination on normal-form coordinates.
long long fd_dimension(GraphPtr graph, int k, int J);

/// Report locating a degree-0 element inside F_{k,J} extended by the bare
/// vertex units it mentions (span{p_v : v in W}).
struct FdEmbedding {
  RawElement support;  // the representation the parameters were read from
  LpaElement element;
  int k = 0;
  int J = 0;
  std::vector<int> extra_vertices;      // W
  long long dimension = 0;
  std::vector<LpaElement> basis;        // echelon basis, normal forms
  std::vector<Rational> coordinates;    // element = sum coord_i * basis_i
  bool w_extension_applied = false;
};

/// (k, J, W) are read off the *given* representation: k = max |alpha| over
/// the support, J the least cutoff covering its edges, W the bare vertex
/// words at vertices outside E^0_J. Every word must have degree 0.
FdEmbedding embed_in_fd(GraphPtr graph, const RawElement& support);

/// Convenience overload using the normal form as the representation.
FdEmbedding embed_in_fd(const LpaElement& element);

struct ClosureReport {
  bool ok = true;
  long long product_checks = 0;
  long long cross_vertex_checks = 0;
  long long star_checks = 0;
  std::string first_failure;
};

/// Samples the containment G_{k',J}(v) G_{l',J}(w) subset of G_{k',J}(v)
/// (both orders), cross-vertex vanishing at equal level, and star-closure
/// of F_{k,J}.
ClosureReport verify_closure(GraphPtr graph, int k, int J, int samples,
                             std::uint64_t seed = 0);

}  // namespace lpa
