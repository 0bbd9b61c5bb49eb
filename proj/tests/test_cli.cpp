#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "lpa/cli.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = lpa::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const char* kLoop = R"({"kind":"finite","vertices":["v"],
  "edges":[{"id":"e","range":"v","source":"v","mult":1}]})";
const char* kChain = R"({"kind":"finite","vertices":["v","w"],
  "edges":[{"id":"e","range":"v","source":"w","mult":1}]})";
const char* kL2 = R"({"kind":"finite","vertices":["v"],
  "edges":[{"id":"e","range":"v","source":"v"},{"id":"f","range":"v","source":"v"}]})";

}  // namespace

TEST_CASE("analyze verdicts and exit codes") {
  auto loop = run({"analyze", "--graph", kLoop});
  CHECK(loop.code == 0);
  CHECK(loop.out.find("strongly Z-graded: yes") != std::string::npos);

  auto chain = run({"analyze", "--graph", kChain});
  CHECK(chain.code == 0);
  CHECK(chain.out.find("strongly Z-graded: no") != std::string::npos);
  CHECK(chain.out.find("sources: w") != std::string::npos);

  auto flat = run({"analyze", "--graph", R"({"kind":"ladder","table":[],"slope":1,"offset":0})"});
  CHECK(flat.code == 0);
  CHECK(flat.out.find("strongly Z-graded: no") != std::string::npos);
  CHECK(flat.out.find("fails at k = 1") != std::string::npos);

  auto steep = run({"analyze", "--graph", R"({"kind":"ladder","table":[],"slope":2,"offset":0})"});
  CHECK(steep.code == 0);
  CHECK(steep.out.find("strongly Z-graded: yes") != std::string::npos);
}

TEST_CASE("nf command") {
  auto r = run({"nf", "--graph", kL2, "--expr", "[e|e]"});
  CHECK(r.code == 0);
  CHECK(r.out == "[v|v] - [f|f]\n");
}

TEST_CASE("exit codes follow the contract") {
  auto usage = run({"no-such-verb"});
  CHECK(usage.code == 2);
  auto missing = run({"nf", "--graph", kLoop});
  CHECK(missing.code == 2);
  auto domain = run({"nf", "--graph", kLoop, "--expr", "[zz|v]"});
  CHECK(domain.code == 1);
  CHECK(domain.err.find("UnknownId") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
  auto a = run({"analyze", "--graph", kL2, "--json", "--seed", "4"});
  auto b = run({"analyze", "--graph", kL2, "--json", "--seed", "4"});
  CHECK(a.out == b.out);
  CHECK(a.code == 0);
}

TEST_CASE("factor-unit emits verifiable JSON certificates") {
  auto witness =
      run({"factor-unit", "--graph", kLoop, "--vertex", "v", "--degree", "1", "--direction",
           "neg-pos", "--max-level", "3", "--json"});
  REQUIRE(witness.code == 0);
  std::string path = "cli_witness_tmp.json";
  {
    std::ofstream out(path);
    out << witness.out;
  }
  auto verified = run({"selftest", "--verify", path});
  CHECK(verified.code == 0);
  CHECK(verified.out.find("verified") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("grade command splits by degree") {
  auto r = run({"grade", "--graph", kLoop, "--expr", "[e|v] + 3*[v|e]"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1: [e|v]") != std::string::npos);
  CHECK(r.out.find("-1: 3*[v|e]") != std::string::npos);
}

TEST_CASE("mul and star commands") {
  auto m = run({"mul", "--graph", kLoop, "--lhs", "[v|e]", "--rhs", "[e|v]"});
  CHECK(m.code == 0);
  CHECK(m.out == "[v|v]\n");
  auto s = run({"star", "--graph", kLoop, "--expr", "[e|v]"});
  CHECK(s.out == "[v|e]\n");
}

TEST_CASE("ladder commands work without truncation") {
  auto y = run({"property-y", "--graph", R"({"kind":"ladder","table":[],"slope":1,"offset":3})"});
  CHECK(y.code == 0);
  CHECK(y.out.find("fails at k = 4") != std::string::npos);

  auto o = run({"oracle-y", "--graph", R"({"kind":"ladder","table":[],"slope":2,"offset":0})",
                "--x", "spine", "-k", "2"});
  CHECK(o.code == 0);
  CHECK(o.out.find("c2_4 c2_3 c2_2 c2_1") != std::string::npos);
}

TEST_CASE("truncation flag turns a ladder into a finite graph") {
  auto r = run({"fd-dim", "--graph", R"({"kind":"ladder","table":[],"slope":2,"offset":0})",
                "--truncate", "3", "-k", "1", "-J", "2"});
  CHECK(r.code == 0);
  auto missing = run({"fd-dim", "--graph", R"({"kind":"ladder","table":[],"slope":2,"offset":0})",
                      "-k", "1", "-J", "2"});
  CHECK(missing.code == 1);
}
