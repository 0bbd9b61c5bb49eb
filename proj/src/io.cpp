#include "lpa/io.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "lpa/parse.hpp"

namespace lpa {

namespace {

[[noreturn]] void bad_json(const std::string& what) { fail(ErrorKind::SyntaxError, what); }

long long mult_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "omega") return kOmega;
    bad_json("edge multiplicity must be a positive integer or \"omega\"");
  }
  if (!j.is_number_integer()) bad_json("edge multiplicity must be an integer or \"omega\"");
  return j.get<long long>();
}

}  // namespace

GraphOrLadder graph_from_json(const Json& j) {
  if (!j.is_object()) bad_json("graph JSON must be an object");
  std::string kind = j.value("kind", "finite");
  GraphOrLadder out;
  if (kind == "ladder") {
    LadderSpec spec;
    if (j.contains("table"))
      for (const auto& b : j.at("table")) spec.table.push_back(b.get<long long>());
    spec.slope = j.value("slope", 0LL);
    spec.offset = j.value("offset", 0LL);
    spec.validate();
    out.ladder = spec;
    return out;
  }
  if (kind != "finite") bad_json("graph kind must be \"finite\" or \"ladder\"");
  GraphInput input;
  if (!j.contains("vertices")) bad_json("finite graph needs a \"vertices\" array");
  for (const auto& v : j.at("vertices")) input.vertices.push_back(v.get<std::string>());
  for (const auto& e : j.value("edges", Json::array())) {
    EdgeSpec spec;
    spec.id = e.at("id").get<std::string>();
    spec.range = e.at("range").get<std::string>();
    spec.source = e.at("source").get<std::string>();
    spec.multiplicity = e.contains("mult") ? mult_from_json(e.at("mult")) : 1;
    input.edges.push_back(std::move(spec));
  }
  if (j.contains("enumeration"))
    for (const auto& id : j.at("enumeration")) input.enumeration.push_back(id.get<std::string>());
  out.graph = Graph::validate(input);
  return out;
}

GraphOrLadder load_graph(const std::string& path_or_inline) {
  std::string text;
  std::string trimmed = path_or_inline;
  std::size_t first = trimmed.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && trimmed[first] == '{') {
    text = path_or_inline;
  } else {
    std::ifstream in(path_or_inline);
    if (!in) fail(ErrorKind::InvalidInput, "cannot read graph file '" + path_or_inline + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) bad_json("malformed JSON in '" + path_or_inline + "'");
  return graph_from_json(j);
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["kind"] = "finite";
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const Edge& e : g.edges_in_input_order()) {
    Json edge;
    edge["id"] = e.id;
    edge["range"] = g.vertices()[e.range];
    edge["source"] = g.vertices()[e.source];
    if (e.multiplicity == kOmega)
      edge["mult"] = "omega";
    else
      edge["mult"] = e.multiplicity;
    edges.push_back(std::move(edge));
  }
  j["edges"] = std::move(edges);
  Json enumeration = Json::array();
  for (int pos = 0; pos < g.edge_count(); ++pos) enumeration.push_back(g.edge_id(pos));
  j["enumeration"] = std::move(enumeration);
  return j;
}

Json ladder_to_json(const LadderSpec& spec) {
  Json j;
  j["kind"] = "ladder";
  j["table"] = spec.table;
  j["slope"] = spec.slope;
  j["offset"] = spec.offset;
  return j;
}

Json graph_or_ladder_to_json(const GraphOrLadder& g) {
  return g.is_ladder() ? ladder_to_json(*g.ladder) : graph_to_json(*g.graph);
}

namespace {

Json failure_to_json(const GraphOrLadder& g, const PropertyYFailure& failure) {
  Json j;
  j["k"] = failure.k;
  if (failure.spine_witness) {
    j["witness"] = "spine";
  } else if (failure.lasso) {
    j["witness"] = lasso_to_string(*g.graph, *failure.lasso);
  }
  j["bound"] = failure.bound;
  j["exact"] = failure.exact;
  if (failure.max_margin) j["max_margin"] = *failure.max_margin;
  return j;
}

}  // namespace

Json property_y_to_json(const GraphOrLadder& g, const PropertyYVerdict& verdict,
                        const YOptions& opts) {
  Json j;
  j["type"] = "property-y";
  j["graph"] = graph_or_ladder_to_json(g);
  j["allow_empty_prefix"] = opts.allow_empty_prefix;
  j["holds"] = verdict.holds;
  if (verdict.holds) {
    if (verdict.slope) {
      j["criterion"] = "sup_j (b_j - j) = infinity";
      j["slope"] = *verdict.slope;
    } else {
      j["checked_k_max"] = verdict.checked_k_max;
      j["preperiod"] = verdict.preperiod;
      j["period"] = verdict.period;
    }
  } else {
    j["failure"] = failure_to_json(g, *verdict.failure);
  }
  return j;
}

Json strongly_graded_to_json(const GraphOrLadder& g, const StronglyGradedReport& report,
                             const YOptions& opts) {
  Json j;
  j["type"] = "strongly-graded";
  j["graph"] = graph_or_ladder_to_json(g);
  j["strongly_graded"] = report.strongly_graded;
  Json clauses;
  clauses["row_finite"] = report.row_finite;
  clauses["sources"] = report.sources;
  clauses["property_y"] = property_y_to_json(g, report.property_y, opts);
  clauses["property_y"].erase("graph");
  clauses["property_y"].erase("type");
  j["clauses"] = std::move(clauses);
  Json conclusions;
  conclusions["leavitt_path_algebra"] = report.strongly_graded;
  conclusions["graph_c_star_algebra"] = report.strongly_graded;
  conclusions["basis"] = "theorem-derived";
  j["conclusions"] = std::move(conclusions);
  return j;
}

Json witness_to_json(const FactorizationWitness& w) {
  Json j;
  j["type"] = "factorization-witness";
  j["graph"] = graph_to_json(*w.target.graph());
  j["target"] = element_to_string(w.target);
  j["split"] = Json::array({w.deg_left, w.deg_right});
  Json pairs = Json::array();
  for (const auto& [x, y] : w.pairs)
    pairs.push_back(Json::array({element_to_string(x), element_to_string(y)}));
  j["pairs"] = std::move(pairs);
  j["level"] = w.level;
  return j;
}

Json embedding_to_json(const FdEmbedding& e) {
  const Graph& g = *e.element.graph();
  Json j;
  j["type"] = "fd-embedding";
  j["graph"] = graph_to_json(g);
  j["element"] = element_to_string(e.element);
  j["k"] = e.k;
  j["J"] = e.J;
  Json extra = Json::array();
  for (int v : e.extra_vertices) extra.push_back(g.vertex_id(v));
  j["W"] = std::move(extra);
  j["w_extension_applied"] = e.w_extension_applied;
  j["dimension"] = e.dimension;
  Json basis = Json::array();
  for (const LpaElement& b : e.basis) basis.push_back(element_to_string(b));
  j["basis"] = std::move(basis);
  Json coords = Json::array();
  for (const Rational& c : e.coordinates) coords.push_back(to_string(c));
  j["coordinates"] = std::move(coords);
  return j;
}

namespace {

VerifyResult verify_property_y_failure(const Json& j) {
  GraphOrLadder g = graph_from_json(j.at("graph"));
  const Json& failure = j.at("failure");
  long long k = failure.at("k").get<long long>();
  if (k < 1) return {false, "failure degree k must be at least 1"};
  YOptions opts;
  opts.allow_empty_prefix = j.value("allow_empty_prefix", false);
  long long min_n = opts.allow_empty_prefix ? 0 : 1;

  if (g.is_ladder()) {
    if (failure.value("witness", "") != "spine") return {false, "ladder witness must be the spine"};
    auto margin = g.ladder->max_branch_margin();
    if (!margin) return {false, "slope >= 2 ladders satisfy property (Y)"};
    if (k != *margin + 1)
      return {false, "certificate k disagrees with 1 + max_j(b_j - j) = " +
                         std::to_string(*margin + 1)};
    // Spot-check the closed form along an initial window of the spine.
    for (long long n = min_n; n <= *margin + 64; ++n)
      if (ladder_member(*g.ladder, n, n + k)) return {false, "spine admits a witness at n = " + std::to_string(n)};
    return {true, "ladder spine failure certificate verified (exact criterion)"};
  }

  const Graph& graph = *g.graph;
  LassoPath lasso = parse_lasso(failure.at("witness").get<std::string>(), graph);
  LengthProfile profile = length_profiles(graph);
  long long bound = failure.at("bound").get<long long>();
  long long span = profile.preperiod + profile.period;
  long long P = lasso.prefix.length();
  long long C = lasso.cycle.length();
  long long covering = std::max<long long>(P, profile.preperiod) + std::lcm<long long>(C, profile.period);
  if (bound < covering || bound < span * graph.vertex_count() + 1)
    return {false, "stated bound does not cover the walk's period"};
  for (long long n = min_n; n <= bound; ++n)
    if (profile.member(lasso_vertex(graph, lasso, n), n + k))
      return {false, "member(v_n, n+k) holds at n = " + std::to_string(n)};
  return {true, "property-(Y) failure certificate verified to its bound"};
}

VerifyResult verify_factorization_witness(const Json& j) {
  GraphOrLadder g = graph_from_json(j.at("graph"));
  if (g.is_ladder()) return {false, "factorization witnesses live on finite graphs"};
  auto graph = std::make_shared<const Graph>(*g.graph);
  FactorizationWitness w;
  w.target = parse_element(j.at("target").get<std::string>(), graph);
  w.deg_left = j.at("split").at(0).get<long long>();
  w.deg_right = j.at("split").at(1).get<long long>();
  w.level = j.value("level", 0LL);
  for (const auto& pair : j.at("pairs")) {
    w.pairs.emplace_back(parse_element(pair.at(0).get<std::string>(), graph),
                         parse_element(pair.at(1).get<std::string>(), graph));
  }
  if (!verify_factorization(w)) return {false, "witness does not reproduce its target"};
  return {true, "factorization witness verified"};
}

VerifyResult verify_embedding(const Json& j) {
  GraphOrLadder g = graph_from_json(j.at("graph"));
  if (g.is_ladder()) return {false, "embeddings live on finite graphs"};
  auto graph = std::make_shared<const Graph>(*g.graph);
  LpaElement element = parse_element(j.at("element").get<std::string>(), graph);
  FdEmbedding recomputed = embed_in_fd(element);
  if (recomputed.k != j.at("k").get<int>() || recomputed.J != j.at("J").get<int>())
    return {false, "recomputed (k, J) disagree with the certificate"};
  std::vector<std::string> expected_w;
  for (int v : recomputed.extra_vertices) expected_w.push_back(graph->vertex_id(v));
  if (expected_w != j.at("W").get<std::vector<std::string>>())
    return {false, "recomputed W disagrees with the certificate"};
  if (recomputed.dimension != j.at("dimension").get<long long>())
    return {false, "recomputed dimension disagrees with the certificate"};

  const Json& basis = j.at("basis");
  const Json& coords = j.at("coordinates");
  if (basis.size() != coords.size()) return {false, "basis/coordinate length mismatch"};
  LpaElement sum(graph);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    LpaElement b = parse_element(basis[i].get<std::string>(), graph);
    sum = add(sum, scale(parse_rational(coords[i].get<std::string>()), b));
  }
  if (!(sum == element)) return {false, "coordinates do not reproduce the element"};
  return {true, "finite-dimensional embedding verified"};
}

}  // namespace

VerifyResult verify_certificate(const Json& j) {
  if (!j.is_object() || !j.contains("type")) return {false, "certificate lacks a type tag"};
  std::string type = j.at("type").get<std::string>();
  try {
    if (type == "property-y" || type == "strongly-graded") {
      const Json& payload = type == "strongly-graded" ? j.at("clauses").at("property_y") : j;
      Json merged = payload;
      merged["graph"] = j.at("graph");
      if (merged.value("holds", true))
        return {false, "only failure certificates carry re-checkable witnesses"};
      return verify_property_y_failure(merged);
    }
    if (type == "factorization-witness") return verify_factorization_witness(j);
    if (type == "fd-embedding") return verify_embedding(j);
  } catch (const Error& err) {
    return {false, std::string("verification raised: ") + err.what()};
  } catch (const Json::exception& err) {
    return {false, std::string("malformed certificate: ") + err.what()};
  }
  return {false, "unknown certificate type '" + type + "'"};
}

}  // namespace lpa
