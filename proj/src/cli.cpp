#include "lpa/cli.hpp"

#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lpa/io.hpp"
#include "lpa/parse.hpp"
#include "lpa/selftest.hpp"

namespace lpa::cli {

namespace {

struct Options {
  std::string graph;
  std::string expr;
  std::string lhs, rhs;
  std::string vertex;
  long long degree = 0;
  std::string direction = "neg-pos";
  long long max_level = -1;
  int k = 0;
  int J = 0;
  std::string x, y;
  long long truncate = -1;
  long long seed = 0;
  bool json = false;
  bool allow_empty_prefix = false;
  std::string verify_file;
};

struct Context {
  Options opt;
  std::ostream& out;
  std::ostream& err;

  GraphOrLadder loaded;
  GraphPtr finite;  // set when a finite graph is required or derivable

  YOptions yopts() const { return YOptions{opt.allow_empty_prefix}; }
};

GraphPtr require_finite(Context& ctx) {
  if (ctx.finite) return ctx.finite;
  if (!ctx.loaded.is_ladder()) {
    ctx.finite = std::make_shared<const Graph>(*ctx.loaded.graph);
  } else {
    if (ctx.opt.truncate < 0)
      fail(ErrorKind::InvalidInput,
           "this command needs a finite graph; pass --truncate N to use a ladder truncation");
    ctx.finite =
        std::make_shared<const Graph>(ladder_instantiate(*ctx.loaded.ladder, ctx.opt.truncate));
  }
  return ctx.finite;
}

int require_vertex(const Graph& g, const std::string& id) {
  auto v = g.find_vertex(id);
  if (!v) fail(ErrorKind::UnknownId, "'" + id + "' names no vertex");
  return *v;
}

void emit(Context& ctx, const Json& j, const std::string& human) {
  if (ctx.opt.json)
    ctx.out << j.dump(2) << "\n";
  else
    ctx.out << human;
}

std::string render_property_y(const PropertyYVerdict& verdict, const GraphOrLadder& g) {
  std::ostringstream line;
  if (verdict.holds) {
    line << "property (Y): holds";
    if (verdict.slope)
      line << " (sup_j(b_j - j) = infinity, slope " << *verdict.slope << ")";
    else
      line << " (all degrees k <= " << verdict.checked_k_max << " covered; profile p="
           << verdict.preperiod << ", c=" << verdict.period << ")";
  } else {
    const auto& f = *verdict.failure;
    line << "property (Y): fails at k = " << f.k;
    if (f.spine_witness)
      line << " along the spine";
    else if (f.lasso && g.graph)
      line << " along \"" << lasso_to_string(*g.graph, *f.lasso) << "\"";
    if (f.exact)
      line << " (exact; max_j(b_j - j) = " << (f.max_margin ? *f.max_margin : 0) << ")";
    else
      line << " (checked to prefix length " << f.bound << ")";
  }
  return line.str();
}

int cmd_analyze(Context& ctx) {
  StronglyGradedReport report = ctx.loaded.is_ladder()
                                    ? decide_strongly_graded(*ctx.loaded.ladder, ctx.yopts())
                                    : decide_strongly_graded(*ctx.loaded.graph, ctx.yopts());
  Json j = strongly_graded_to_json(ctx.loaded, report, ctx.yopts());
  std::ostringstream human;
  human << "strongly Z-graded: " << (report.strongly_graded ? "yes" : "no") << "\n";
  human << "  row-finite: " << (report.row_finite ? "yes" : "no") << "\n";
  human << "  sources: ";
  if (report.sources.empty()) {
    human << "none\n";
  } else {
    for (std::size_t i = 0; i < report.sources.size(); ++i)
      human << (i ? ", " : "") << report.sources[i];
    human << "\n";
  }
  human << "  " << render_property_y(report.property_y, ctx.loaded) << "\n";
  human << "  conclusion (theorem-derived): the Leavitt path algebra over Q and the graph "
           "C*-algebra are "
        << (report.strongly_graded ? "both strongly Z-graded" : "not strongly Z-graded") << "\n";
  emit(ctx, j, human.str());
  return 0;
}

int cmd_property_y(Context& ctx) {
  PropertyYVerdict verdict = ctx.loaded.is_ladder()
                                 ? decide_property_y(*ctx.loaded.ladder, ctx.yopts())
                                 : decide_property_y(*ctx.loaded.graph, ctx.yopts());
  Json j = property_y_to_json(ctx.loaded, verdict, ctx.yopts());
  emit(ctx, j, render_property_y(verdict, ctx.loaded) + "\n");
  return 0;
}

int cmd_nf(Context& ctx) {
  GraphPtr g = require_finite(ctx);
  LpaElement x = parse_element(ctx.opt.expr, g);
  Json j;
  j["type"] = "normal-form";
  j["expr"] = ctx.opt.expr;
  j["normal_form"] = element_to_string(x);
  emit(ctx, j, element_to_string(x) + "\n");
  return 0;
}

int cmd_mul(Context& ctx) {
  GraphPtr g = require_finite(ctx);
  LpaElement product = multiply(parse_element(ctx.opt.lhs, g), parse_element(ctx.opt.rhs, g));
  Json j;
  j["type"] = "product";
  j["lhs"] = ctx.opt.lhs;
  j["rhs"] = ctx.opt.rhs;
  j["normal_form"] = element_to_string(product);
  emit(ctx, j, element_to_string(product) + "\n");
  return 0;
}

int cmd_star(Context& ctx) {
  GraphPtr g = require_finite(ctx);
  LpaElement s = star(parse_element(ctx.opt.expr, g));
  Json j;
  j["type"] = "star";
  j["expr"] = ctx.opt.expr;
  j["normal_form"] = element_to_string(s);
  emit(ctx, j, element_to_string(s) + "\n");
  return 0;
}

int cmd_grade(Context& ctx) {
  GraphPtr g = require_finite(ctx);
  auto parts = grade_decompose(parse_element(ctx.opt.expr, g));
  Json j;
  j["type"] = "grade-decomposition";
  j["expr"] = ctx.opt.expr;
  Json by_degree = Json::object();
  std::ostringstream human;
  for (const auto& [deg, component] : parts) {
    by_degree[std::to_string(deg)] = element_to_string(component);
    human << deg << ": " << element_to_string(component) << "\n";
  }
  j["components"] = std::move(by_degree);
  if (parts.empty()) human << "0\n";
  emit(ctx, j, human.str());
  return 0;
}

int render_factor_result(Context& ctx, const FactorResult& result) {
  if (const auto* w = std::get_if<FactorizationWitness>(&result)) {
    Json j = witness_to_json(*w);
    std::ostringstream human;
    human << "factorization witness (degrees " << w->deg_left << ", " << w->deg_right
          << "; level " << w->level << ")\n";
    human << "  target: " << element_to_string(w->target) << "\n";
    for (const auto& [x, y] : w->pairs)
      human << "  " << element_to_string(x) << "  *  " << element_to_string(y) << "\n";
    human << "  verified: " << (verify_factorization(*w) ? "yes" : "NO") << "\n";
    emit(ctx, j, human.str());
    return 0;
  }
  const auto& miss = std::get<NotFoundUpTo>(result);
  Json j;
  j["type"] = "not-found-up-to";
  j["max_level"] = miss.max_level;
  j["note"] = miss.note;
  std::ostringstream human;
  human << "no factorization found up to level " << miss.max_level;
  if (!miss.note.empty()) human << " (" << miss.note << ")";
  human << "\n";
  emit(ctx, j, human.str());
  return 0;
}

int cmd_factor_unit(Context& ctx) {
  GraphPtr g = require_finite(ctx);
  int v = require_vertex(*g, ctx.opt.vertex);
  FactorResult result = factor_local_unit(g, v, ctx.opt.degree,
                                          parse_direction(ctx.opt.direction), ctx.opt.max_level);
  return render_factor_result(ctx, result);
}

int cmd_factor_homog(Context& ctx) {
  GraphPtr g = require_finite(ctx);
  LpaElement x = parse_element(ctx.opt.expr, g);
  auto deg = x.homogeneous_degree();
  if (!deg) fail(ErrorKind::InvalidInput, "element is not homogeneous");
  long long a = ctx.opt.degree;
  FactorResult result = factor_homogeneous(x, a, *deg - a, ctx.opt.max_level);
  return render_factor_result(ctx, result);
}

int cmd_core_embed(Context& ctx) {
  GraphPtr g = require_finite(ctx);
  FdEmbedding embedding = embed_in_fd(parse_element(ctx.opt.expr, g));
  Json j = embedding_to_json(embedding);
  std::ostringstream human;
  human << "embeds in F_{k,J} with k = " << embedding.k << ", J = " << embedding.J;
  if (embedding.w_extension_applied) {
    human << ", W = {";
    for (std::size_t i = 0; i < embedding.extra_vertices.size(); ++i)
      human << (i ? ", " : "") << g->vertex_id(embedding.extra_vertices[i]);
    human << "}";
  }
  human << "; dimension " << embedding.dimension << "\n";
  emit(ctx, j, human.str());
  return 0;
}

int cmd_fd_dim(Context& ctx) {
  GraphPtr g = require_finite(ctx);
  long long dim = fd_dimension(g, ctx.opt.k, ctx.opt.J);
  Json j;
  j["type"] = "fd-dimension";
  j["k"] = ctx.opt.k;
  j["J"] = ctx.opt.J;
  j["dimension"] = dim;
  emit(ctx, j, std::to_string(dim) + "\n");
  return 0;
}

int cmd_matrix_units(Context& ctx) {
  GraphPtr g = require_finite(ctx);
  int v = require_vertex(*g, ctx.opt.vertex);
  MatrixUnitSystem sys = matrix_units(g, ctx.opt.k, ctx.opt.J, v);
  Json j;
  j["type"] = "matrix-units";
  j["k"] = sys.k;
  j["J"] = sys.J;
  j["vertex"] = g->vertex_id(sys.vertex);
  Json idx = Json::array();
  for (const Path& p : sys.index) idx.push_back(path_to_string(*g, p));
  j["index"] = std::move(idx);
  j["d"] = sys.index.size();
  j["relations_ok"] = sys.relations_ok;
  j["products_checked"] = sys.products_checked;
  std::ostringstream human;
  human << "d = " << sys.index.size() << "; relations "
        << (sys.relations_ok ? "hold" : "FAIL") << " (" << sys.products_checked
        << " products)\n";
  emit(ctx, j, human.str());
  return 0;
}

std::string ladder_boundary_to_string(const LadderBoundary& b) {
  std::string out;
  for (std::size_t i = 0; i < b.prefix_edge_ids.size(); ++i) {
    if (i) out += ' ';
    out += b.prefix_edge_ids[i];
  }
  out += ";spine@" + std::to_string(b.stage);
  return out;
}

Json ladder_element_to_json(const LadderGroupoidElement& e) {
  Json j;
  j["x"] = ladder_boundary_to_string(e.x);
  j["k"] = e.k;
  j["y"] = ladder_boundary_to_string(e.y);
  return j;
}

Json lasso_element_to_json(const Graph& g, const GroupoidElement& e) {
  Json j;
  j["x"] = lasso_to_string(g, e.x);
  j["k"] = e.k;
  j["y"] = lasso_to_string(g, e.y);
  return j;
}

bool is_spine_keyword(const std::string& s) { return s == "spine" || s.rfind("spine@", 0) == 0; }

LadderBoundary parse_spine(const std::string& s) {
  LadderBoundary b;
  if (s == "spine") return b;
  b.stage = std::stoll(s.substr(6));
  return b;
}

int cmd_groupoid_factor(Context& ctx) {
  if (ctx.loaded.is_ladder() && ctx.opt.truncate < 0) {
    std::string y_text = ctx.opt.y.empty() ? ctx.opt.x : ctx.opt.y;
    if (!is_spine_keyword(ctx.opt.x) || !is_spine_keyword(y_text))
      fail(ErrorKind::InvalidInput, "ladder boundary paths are given as spine or spine@N");
    const LadderSpec& spec = *ctx.loaded.ladder;
    LadderBoundary x = ladder_canonicalize(spec, parse_spine(ctx.opt.x));
    LadderBoundary y = ladder_canonicalize(spec, parse_spine(y_text));
    if (ladder_element_validate(spec, x, 0, y) != ElementOutcome::Valid)
      fail(ErrorKind::InvalidInput, "(x, 0, y) is not a groupoid element");
    LadderGroupoidElement e{x, 0, y};
    auto result = ladder_factor_element(spec, e, ctx.opt.degree,
                                        parse_direction(ctx.opt.direction), ctx.yopts());
    if (const auto* pair = std::get_if<LadderFactorPair>(&result)) {
      Json j;
      j["type"] = "groupoid-factorization";
      j["left"] = ladder_element_to_json(pair->left);
      j["right"] = ladder_element_to_json(pair->right);
      std::ostringstream human;
      human << "(" << ladder_boundary_to_string(pair->left.x) << ", " << pair->left.k << ", "
            << ladder_boundary_to_string(pair->left.y) << ") * ("
            << ladder_boundary_to_string(pair->right.x) << ", " << pair->right.k << ", "
            << ladder_boundary_to_string(pair->right.y) << ")\n";
      emit(ctx, j, human.str());
      return 0;
    }
    const auto& miss = std::get<ExhaustedProof>(result);
    Json j;
    j["type"] = "exhausted-proof";
    j["exact"] = miss.exact;
    if (miss.max_margin) j["max_margin"] = *miss.max_margin;
    emit(ctx, j,
         std::string("no factorization exists (exact closed-form nonexistence)") + "\n");
    return 0;
  }

  GraphPtr g = require_finite(ctx);
  require_boundary_supported(*g);
  LassoPath x = parse_lasso(ctx.opt.x, *g);
  LassoPath y = ctx.opt.y.empty() ? x : parse_lasso(ctx.opt.y, *g);
  auto validation = element_validate(*g, x, 0, y);
  if (validation.outcome == ElementOutcome::TailsNotEquivalent)
    fail(ErrorKind::NotComposableTails, "x and y are not tail-equivalent");
  if (validation.outcome == ElementOutcome::LagMismatch)
    fail(ErrorKind::InvalidInput, "(x, 0, y) is not a groupoid element");
  auto result = factor_element(*g, *validation.element, ctx.opt.degree,
                               parse_direction(ctx.opt.direction), ctx.yopts());
  if (const auto* pair = std::get_if<GroupoidFactorPair>(&result)) {
    Json j;
    j["type"] = "groupoid-factorization";
    j["left"] = lasso_element_to_json(*g, pair->left);
    j["right"] = lasso_element_to_json(*g, pair->right);
    std::ostringstream human;
    human << "(" << lasso_to_string(*g, pair->left.x) << ", " << pair->left.k << ", "
          << lasso_to_string(*g, pair->left.y) << ") * (" << lasso_to_string(*g, pair->right.x)
          << ", " << pair->right.k << ", " << lasso_to_string(*g, pair->right.y) << ")\n";
    emit(ctx, j, human.str());
    return 0;
  }
  const auto& miss = std::get<ExhaustedProof>(result);
  Json j;
  j["type"] = "exhausted-proof";
  j["bound"] = miss.bound;
  j["exact"] = miss.exact;
  emit(ctx, j,
       "no factorization found; prefixes checked to bound " + std::to_string(miss.bound) + "\n");
  return 0;
}

int cmd_oracle_y(Context& ctx) {
  if (ctx.loaded.is_ladder() && ctx.opt.truncate < 0) {
    if (!is_spine_keyword(ctx.opt.x))
      fail(ErrorKind::InvalidInput, "ladder infinite paths are given as spine or spine@N");
    LadderBoundary b = parse_spine(ctx.opt.x);
    auto result = ladder_property_y_witness(*ctx.loaded.ladder, b.stage, ctx.opt.k, ctx.yopts());
    if (const auto* hit = std::get_if<LadderWitnessFound>(&result)) {
      Json j;
      j["type"] = "property-y-witness";
      j["n"] = hit->n;
      j["beta"] = hit->beta_edge_ids;
      std::ostringstream human;
      human << "n = " << hit->n << ", beta =";
      for (const auto& id : hit->beta_edge_ids) human << " " << id;
      human << "\n";
      emit(ctx, j, human.str());
      return 0;
    }
    const auto& miss = std::get<ExhaustedProof>(result);
    Json j;
    j["type"] = "exhausted-proof";
    j["exact"] = miss.exact;
    if (miss.max_margin) j["max_margin"] = *miss.max_margin;
    emit(ctx, j, "no witness exists (exact closed-form nonexistence)\n");
    return 0;
  }

  GraphPtr g = require_finite(ctx);
  LassoPath x = parse_lasso(ctx.opt.x, *g);
  auto result = property_y_witness(*g, x, ctx.opt.k, ctx.yopts());
  if (const auto* hit = std::get_if<WitnessFound>(&result)) {
    Json j;
    j["type"] = "property-y-witness";
    j["n"] = hit->n;
    j["beta"] = path_to_string(*g, hit->beta);
    emit(ctx, j,
         "n = " + std::to_string(hit->n) + ", beta = " + path_to_string(*g, hit->beta) + "\n");
    return 0;
  }
  const auto& miss = std::get<ExhaustedProof>(result);
  Json j;
  j["type"] = "exhausted-proof";
  j["bound"] = miss.bound;
  j["exact"] = miss.exact;
  emit(ctx, j, "no witness found; prefixes checked to bound " + std::to_string(miss.bound) + "\n");
  return 0;
}

int cmd_selftest(Context& ctx) {
  if (!ctx.opt.verify_file.empty()) {
    std::ifstream in(ctx.opt.verify_file);
    if (!in) fail(ErrorKind::InvalidInput, "cannot read '" + ctx.opt.verify_file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    Json j = Json::parse(buf.str(), nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::SyntaxError, "malformed certificate JSON");
    VerifyResult result = verify_certificate(j);
    Json out;
    out["type"] = "verification";
    out["ok"] = result.ok;
    out["detail"] = result.detail;
    emit(ctx, out, std::string(result.ok ? "verified: " : "REJECTED: ") + result.detail + "\n");
    return result.ok ? 0 : 1;
  }
  SelfTestResult result = run_selftest(static_cast<std::uint64_t>(ctx.opt.seed));
  std::ostringstream human;
  for (const auto& line : result.lines) human << line << "\n";
  human << (result.ok ? "selftest: all checks passed\n" : "selftest: FAILURES\n");
  Json j;
  j["type"] = "selftest";
  j["seed"] = ctx.opt.seed;
  j["ok"] = result.ok;
  j["checks"] = result.lines;
  emit(ctx, j, human.str());
  return result.ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"graph algebra grading toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_graph = [&](CLI::App* sub, bool required = true) {
    auto* o = sub->add_option("--graph", opt.graph, "graph JSON file or inline JSON");
    if (required) o->required();
    sub->add_option("--truncate", opt.truncate, "instantiate a ladder truncation at stage N");
    sub->add_flag("--json", opt.json, "machine-readable output");
    sub->add_option("--seed", opt.seed, "seed for randomized checks");
    sub->add_flag("--allow-empty-prefix", opt.allow_empty_prefix,
                  "allow |alpha| = 0 in property (Y)");
  };

  auto* analyze = app.add_subcommand("analyze", "strong-grading verdict with evidence");
  add_graph(analyze);

  auto* property_y = app.add_subcommand("property-y", "property (Y) decision");
  add_graph(property_y);

  auto* nf = app.add_subcommand("nf", "normal form of an element");
  add_graph(nf);
  nf->add_option("--expr", opt.expr, "element expression")->required();

  auto* mul = app.add_subcommand("mul", "product of two elements");
  add_graph(mul);
  mul->add_option("--lhs", opt.lhs)->required();
  mul->add_option("--rhs", opt.rhs)->required();

  auto* star_cmd = app.add_subcommand("star", "involution of an element");
  add_graph(star_cmd);
  star_cmd->add_option("--expr", opt.expr)->required();

  auto* grade = app.add_subcommand("grade", "degree decomposition");
  add_graph(grade);
  grade->add_option("--expr", opt.expr)->required();

  auto* factor_unit = app.add_subcommand("factor-unit", "factor p_v through degree +-k");
  add_graph(factor_unit);
  factor_unit->add_option("--vertex", opt.vertex)->required();
  factor_unit->add_option("--degree", opt.degree)->required();
  factor_unit->add_option("--direction", opt.direction, "pos-neg or neg-pos");
  factor_unit->add_option("--max-level", opt.max_level);

  auto* factor_homog =
      app.add_subcommand("factor-homog", "factor a homogeneous element at a degree split");
  add_graph(factor_homog);
  factor_homog->add_option("--expr", opt.expr)->required();
  factor_homog->add_option("--degree", opt.degree, "degree of the left factors")->required();
  factor_homog->add_option("--max-level", opt.max_level);

  auto* core_embed = app.add_subcommand("core-embed", "finite-dimensional embedding in the core");
  add_graph(core_embed);
  core_embed->add_option("--expr", opt.expr)->required();

  auto* fd_dim = app.add_subcommand("fd-dim", "dimension of F_{k,J}");
  add_graph(fd_dim);
  fd_dim->add_option("-k", opt.k)->required();
  fd_dim->add_option("-J", opt.J)->required();

  auto* units = app.add_subcommand("matrix-units", "matrix-unit system over E^k_J v");
  add_graph(units);
  units->add_option("-k", opt.k)->required();
  units->add_option("-J", opt.J)->required();
  units->add_option("--vertex", opt.vertex)->required();

  auto* gfactor = app.add_subcommand("groupoid-factor", "factor a degree-0 groupoid element");
  add_graph(gfactor);
  gfactor->add_option("--x", opt.x, "lasso \"prefix;cycle\" or spine[@N]")->required();
  gfactor->add_option("--y", opt.y, "defaults to x");
  gfactor->add_option("--degree", opt.degree)->required();
  gfactor->add_option("--direction", opt.direction, "pos-neg or neg-pos");

  auto* oracle = app.add_subcommand("oracle-y", "property (Y) witness along an infinite path");
  add_graph(oracle);
  oracle->add_option("--x", opt.x, "lasso \"prefix;cycle\" or spine[@N]")->required();
  oracle->add_option("-k", opt.k)->required();

  auto* selftest = app.add_subcommand("selftest", "invariant suite / certificate verification");
  selftest->add_option("--seed", opt.seed);
  selftest->add_option("--verify", opt.verify_file, "re-verify a serialized certificate");
  selftest->add_flag("--json", opt.json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    Context ctx{opt, out, err, {}, nullptr};
    if (!opt.graph.empty()) ctx.loaded = load_graph(opt.graph);
    if (analyze->parsed()) return cmd_analyze(ctx);
    if (property_y->parsed()) return cmd_property_y(ctx);
    if (nf->parsed()) return cmd_nf(ctx);
    if (mul->parsed()) return cmd_mul(ctx);
    if (star_cmd->parsed()) return cmd_star(ctx);
    if (grade->parsed()) return cmd_grade(ctx);
    if (factor_unit->parsed()) return cmd_factor_unit(ctx);
    if (factor_homog->parsed()) return cmd_factor_homog(ctx);
    if (core_embed->parsed()) return cmd_core_embed(ctx);
    if (fd_dim->parsed()) return cmd_fd_dim(ctx);
    if (units->parsed()) return cmd_matrix_units(ctx);
    if (gfactor->parsed()) return cmd_groupoid_factor(ctx);
    if (oracle->parsed()) return cmd_oracle_y(ctx);
    if (selftest->parsed()) return cmd_selftest(ctx);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "usage error: no command\n";
  return 2;
}

}  // namespace lpa::cli
