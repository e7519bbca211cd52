#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyclo/cli.hpp"

namespace {

std::string fixture(const char* name) { return std::string(CYCLO_FIXTURE_DIR) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cyclo::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("h1") {
  auto r = run({"h1", "builtin:trefoil", "--p-range", "1..6"});
  CHECK(r.code == 0);
  CHECK(r.out == "p,h1\n1,1\n2,3\n3,4\n4,3\n5,1\n6,0\n");
  r = run({"h1", fixture("trefoil.json"), "--p", "2", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"h1\": \"3\"") != std::string::npos);
}

TEST_CASE("wheel-table") {
  auto r = run({"wheel-table", "--p", "2", "--n-max", "20"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\n20,1099509530625\n") != std::string::npos);
}

TEST_CASE("cwl") {
  auto r = run({"cwl", "builtin:unknot", fixture("two_leg_theta.json"), "--p", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"magnitude\": \"4\"") != std::string::npos);
  r = run({"cwl", "builtin:unknot", fixture("two_leg_theta.json"), "--p", "1", "--unsigned",
           "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "magnitude,sign,grade,p,label\n8,unknown,2,1,two-leg-theta\n");
  r = run({"cwl", "builtin:unknot", fixture("theta_twisted.json"), "--p", "3", "--format", "csv"});
  CHECK(r.out == "magnitude,sign,grade,p,label\n6,-1,2,3,theta-twisted\n");
  r = run({"cwl", "builtin:trefoil", fixture("two_leg_theta.json"), "--p", "2", "--leg-cap", "1"});
  CHECK(r.code == 1);
}

TEST_CASE("multiplier and validate") {
  auto r = run({"multiplier", fixture("kappa_3.json"), "--p-range", "1..4"});
  CHECK(r.code == 0);
  CHECK(r.out == "p,multiplier\n1,0\n2,8\n3,0\n4,4\n");
  r = run({"validate", fixture("theta_one_leg.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"surplus\": 2") != std::string::npos);
  r = run({"validate", fixture("chord.json")});
  CHECK(r.code == 1);
  CHECK(r.err.find("violation chord at edge 0") != std::string::npos);
  r = run({"validate", fixture("fork.json")});
  CHECK(r.code == 1);
  CHECK(r.err.find("violation fork at vertex 0") != std::string::npos);
}

TEST_CASE("lift") {
  auto r = run({"lift", fixture("lift_triangle_ok.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("[[0,1,2],[1,2,0],[2,0,1]]") != std::string::npos);
  r = run({"lift", fixture("lift_triangle_bad.json")});
  CHECK(r.code == 0);
  CHECK(r.out == "INADMISSIBLE\n");
  r = run({"lift", fixture("lift_triangle_bad.json"), "--p", "1", "--format", "csv"});
  CHECK(r.out == "v0,v1,v2\n0,0,0\n");
}

TEST_CASE("window") {
  auto r = run({"window", "--p", "3", "--l-start", "1", "--count", "5"});
  CHECK(r.out == "l,multiplier,witness\n1,3,1\n2,3,2\n3,0,4\n4,-9,4\n5,-27,5\n");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"h1", "builtin:trefoil"}).code == 1);
  CHECK(run({"h1", "builtin:nope", "--p", "2"}).code == 2);
  CHECK(run({"h1", "/nonexistent.json", "--p", "2"}).code == 2);
  CHECK(run({"h1", "builtin:trefoil", "--p", "0"}).code == 1);
  CHECK(run({"h1", "builtin:trefoil", "--p-range", "3..x"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("--out writes a file and output is deterministic") {
  const auto path = std::filesystem::temp_directory_path() / "cyclo_cli_test.csv";
  auto r = run({"wheel-table", "--p", "3", "--n-max", "12", "--out", path.string()});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream file;
  file << in.rdbuf();
  CHECK(file.str() == run({"wheel-table", "--p", "3", "--n-max", "12"}).out);
  std::filesystem::remove(path);
}
