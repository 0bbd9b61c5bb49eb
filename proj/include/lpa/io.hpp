#pragma once

#include <string>

#include <json.hpp>

#include "lpa/core.hpp"
#include "lpa/groupoid.hpp"
#include "lpa/lengths.hpp"
#include "lpa/witness.hpp"

namespace lpa {

using Json = nlohmann::ordered_json;

// Graph JSON:
//   {"kind":"finite","vertices":[...],"edges":[{"id","range","source","mult"}...],
//    "enumeration":[...]?}
//   {"kind":"ladder","table":[...],"slope":int,"offset":int}
GraphOrLadder graph_from_json(const Json& j);
/// Accepts inline JSON text or (when the text does not start with '{') a path.
GraphOrLadder load_graph(const std::string& path_or_inline);
Json graph_to_json(const Graph& g);
Json ladder_to_json(const LadderSpec& spec);
Json graph_or_ladder_to_json(const GraphOrLadder& g);

// Certificates. Each carries "type" and an embedded "graph" so it re-verifies
// from the serialized form alone.
Json property_y_to_json(const GraphOrLadder& g, const PropertyYVerdict& verdict,
                        const YOptions& opts);
Json strongly_graded_to_json(const GraphOrLadder& g, const StronglyGradedReport& report,
                             const YOptions& opts);
Json witness_to_json(const FactorizationWitness& w);
Json embedding_to_json(const FdEmbedding& e);

struct VerifyResult {
  bool ok = false;
  std::string detail;
};

/// Re-verifies a serialized certificate (property-(Y) failure, factorization
/// witness, or finite-dimensional embedding) from the file contents alone.
VerifyResult verify_certificate(const Json& j);

}  // namespace lpa
