#pragma once

#include <string>

#include "lpa/algebra.hpp"
#include "lpa/lasso.hpp"

namespace lpa {

// Element grammar:
//   element  := term (("+"|"-") term)*
//   term     := (rational "*")? mono
//   mono     := "[" leg "|" leg "]"
//   leg      := vertex-id | edge-id (space edge-id)*
//   rational := "-"? digits ("/" digits)?
// Legs are listed range-to-source. "0" denotes the zero element. Ids must be
// alphanumeric/underscore to be quotable in this grammar; a lone id that
// names both a vertex and an edge is read as the vertex.

RawElement parse_element_raw(const std::string& text, const Graph& g);
LpaElement parse_element(const std::string& text, GraphPtr graph);

/// Lasso syntax: "prefix;cycle" with whitespace-separated edge ids; the
/// prefix may be a single vertex id (empty prefix anchored there).
LassoPath parse_lasso(const std::string& text, const Graph& g);

}  // namespace lpa
