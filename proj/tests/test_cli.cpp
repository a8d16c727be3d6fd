#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "generators.hpp"
#include "qalg/cli.hpp"
#include "qalg/parser.hpp"

using namespace qalg;
using qalg::testing::Rng;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"mul", "xi", "x"}).code == kExitOk);
  CHECK(run({"holonomy-check", "--m", "2", "--a", "1+x"}).code == kExitFalse);
  CHECK(run({"mul", "xi"}).code == kExitUsage);
  CHECK(run({"normalize", "x^-1"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--json", "--text", "ord", "x"}).code == kExitUsage);
  CHECK(run({"--vars", "0", "ord", "x"}).code == kExitUsage);
}

TEST_CASE("decision commands lead with the verdict") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"holonomy-check", "--m", "2", "--a", "5*x"},
           {"eps-check", "--canonical"},
           {"psi-check", "--b", "1"},
       }) {
    Run r = run(args);
    CHECK(r.out.rfind("verdict: ", 0) == 0);
  }
}

TEST_CASE("global flags may follow the subcommand") {
  CHECK(run({"--display", "star", "u", "x"}).out == run({"star", "u", "x", "--display"}).out);
  CHECK(run({"--prec", "-3", "mul", "xi", "x"}).out == "x*xi + 1 (mod order < -2)\n");
  CHECK(run({"normalize", "-x*xi"}).out == "-x*xi\n");
  CHECK(run({"adj", "-h"}).out == "tau^-1\n");
  CHECK(run({"translate", "t", "-1/2"}).out == "t - 1/2\n");
  CHECK(run({"eps-check", "--wx", "0", "--wu", "-1"}).code == kExitFalse);
}

TEST_CASE("JSON symbols round trip through --input") {
  Rng rng(0xc11);
  const std::string path = "test_cli_symbol.json";
  for (int n = 0; n < 30; ++n) {
    qalg::testing::SymbolShape shape;
    shape.dim = 1 + n % 2;
    MicroSymbol a = qalg::testing::random_symbol(rng, shape);
    const std::string vars = std::to_string(shape.dim);
    Run j = run({"--json", "--vars", vars, "normalize", a.to_string()});
    REQUIRE(j.code == kExitOk);
    {
      std::ofstream f(path);
      f << j.out;
    }
    Run back = run({"--vars", vars, "--input", path, "normalize"});
    CHECK(back.code == kExitOk);
    CHECK(back.out == a.to_string() + "\n");
  }
  std::remove(path.c_str());
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"qmul", "x*e(1) + t*e(-1/2)", "xi*e(2) + 1"};
  CHECK(run(args).out == run(args).out);
}
