#pragma once

#include <map>
#include <optional>
#include <vector>

#include "lpa/algebra.hpp"

namespace lpa {

/// Exact row space over Q with coordinates indexed by normal-form monomials.
/// Rows are kept in echelon form with unit leading coefficients; insertion
/// order is deterministic, so bases are reproducible.
class RowSpace {
 public:
  using Vector = std::map<Monomial, Rational>;

  /// Reduces and inserts; returns true when the rank grew.
  bool add(Vector vec);

  bool contains(Vector vec) const;

  /// Coordinates of vec against the echelon basis rows, or nullopt.
  std::optional<std::vector<Rational>> coordinates(Vector vec) const;

  int dimension() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vector>& basis() const { return rows_; }

 private:
  std::vector<Vector> rows_;
  std::map<Monomial, int> pivot_row_;
};

}  // namespace lpa
