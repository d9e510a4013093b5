#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ducci/cli.hpp"

namespace {

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = ducci::cli::run(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("step") {
  const auto r = run({"step", "--m", "5", "--tuple", "0,0,0,1"});
  CHECK(r.status == 0);
  CHECK(r.out == "0,0,1,1\n");
}

TEST_CASE("orbit stops before the first repeat") {
  const auto r = run({"orbit", "--m", "5", "--tuple", "0,0,0,1"});
  CHECK(r.status == 0);
  CHECK(r.out == "0,0,0,1\n0,0,1,1\n0,1,2,1\n1,3,3,1\n4,1,4,2\n");

  const auto fixed = run({"orbit", "--m", "5", "--tuple", "0,0,0,0"});
  CHECK(fixed.out == "0,0,0,0\n");

  const auto stepped = run({"orbit", "--m", "5", "--tuple", "0,0,0,1",
                            "--steps", "2"});
  CHECK(stepped.out == "0,0,0,1\n0,0,1,1\n0,1,2,1\n");
}

TEST_CASE("cycle") {
  const auto basic = run({"cycle", "--n", "4", "--m", "5"});
  CHECK(basic.status == 0);
  CHECK(basic.out == "len=1 per=4\n");

  const auto tuple = run({"cycle", "--m", "5", "--tuple", "0,0,1,1"});
  CHECK(tuple.out == "len=0 per=4\n");

  const auto mismatch =
      run({"cycle", "--n", "6", "--m", "5", "--tuple", "0,0,1,1"});
  CHECK(mismatch.status == 1);

  const auto budget =
      run({"cycle", "--n", "4", "--m", "5", "--max-steps", "2"});
  CHECK(budget.status == 1);
  CHECK(budget.err.find("max_steps") != std::string::npos);
}

TEST_CASE("coeff") {
  const auto row = run({"coeff", "--n", "4", "--m", "5", "--r", "4"});
  CHECK(row.out == "2,4,1,4\n");
  const auto rev =
      run({"coeff", "--n", "4", "--m", "5", "--r", "4", "--reverse"});
  CHECK(rev.out == "4,1,4,2\n");
}

TEST_CASE("pred") {
  CHECK(run({"pred", "--m", "5", "--tuple", "0,0,0,1", "--exists"}).out ==
        "no\n");
  CHECK(run({"pred", "--m", "5", "--tuple", "0,0,1,1", "--exists"}).out ==
        "yes\n");
  CHECK(run({"pred", "--m", "5", "--tuple", "0,0,1,1", "--construct"}).out ==
        "0,0,0,1\n");
  CHECK(run({"pred", "--m", "2", "--tuple", "0,0,1,1,1,1"}).out ==
        "0,0,0,1,0,1\n1,1,1,0,1,0\n");
  CHECK(run({"pred", "--m", "5", "--tuple", "0,0,0,1"}).out.empty());
  CHECK(run({"pred", "--m", "3", "--tuple", "1,1,1", "--general"}).out ==
        "2,2,2\n");

  CHECK(run({"pred", "--n", "4", "--m", "5", "--tuple", "0,0,1,1",
             "--exists"}).out == "yes\n");
  CHECK(run({"pred", "--n", "6", "--m", "5", "--tuple", "0,0,1,1",
             "--exists"}).status == 1);
  CHECK(run({"pred", "--m", "5", "--tuple", "0,0,0,1", "--construct"}).status ==
        1);
  CHECK(run({"pred", "--m", "2", "--tuple", "1,1,1"}).status == 1);  // odd n
  CHECK(run({"pred", "--m", "5", "--tuple", "0,0,1,1", "--exists",
             "--construct"}).status == 2);
}

TEST_CASE("formula") {
  CHECK(run({"formula", "--n", "6", "--m", "2"}).out ==
        "L=2 kind=exact case=2\n");
  CHECK(run({"formula", "--n", "4", "--m", "4", "--computed"}).out ==
        "L=6 kind=bound case=3 computed=6\n");
  CHECK(run({"formula", "--n", "3", "--m", "8"}).out ==
        "L=3 kind=exact case=odd-n\n");
  CHECK(run({"formula", "--n", "3", "--m", "5"}).status == 1);
}

TEST_CASE("graph") {
  const auto dot = run({"graph", "--n", "4", "--m", "5", "--depth", "0"});
  CHECK(dot.status == 0);
  CHECK(dot.out.starts_with("digraph ducci {\n"));

  const auto file =
      (std::filesystem::temp_directory_path() / "ducci_cli_graph.dot").string();
  std::remove(file.c_str());
  const auto saved =
      run({"graph", "--n", "6", "--m", "2", "--depth", "2", "--out", file});
  CHECK(saved.status == 0);
  CHECK(saved.out.empty());
  std::ifstream in(file);
  const std::string content(std::istreambuf_iterator<char>(in), {});
  CHECK(content == run({"graph", "--n", "6", "--m", "2", "--depth", "2"}).out);
  std::remove(file.c_str());

  CHECK(run({"graph", "--n", "3", "--m", "2", "--depth", "1"}).status == 1);
}

TEST_CASE("sweep prints CSV to stdout when no file is given") {
  const auto r = run({"sweep", "--n-min", "4", "--n-max", "4", "--m-min", "4",
                      "--m-max", "5"});
  CHECK(r.status == 0);
  CHECK(r.out.find("n,m,case,formula,kind,computed_L,computed_P,agrees,"
                   "conjecture_equality,steps_used\n") != std::string::npos);
  CHECK(r.out.find("4,4,3,6,bound,6,1,yes,yes,7\n") != std::string::npos);
  CHECK(r.out.find("4,5,1,1,exact,1,4,yes,,5\n") != std::string::npos);
  CHECK(r.out.find("rows=2 agree=2 disagree=0 budget-exceeded=0\n") !=
        std::string::npos);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--primes", "2", "3", "--k-max", "2", "--n1",
                      "3", "--c-max", "2"});
  CHECK(r.status == 0);
  CHECK(r.out.find("lemma-cells passed=") != std::string::npos);
  CHECK(r.out.find("failed=0") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).status == 2);
  CHECK(run({"bogus"}).status == 2);
  CHECK(run({"cycle", "--m", "5", "--badflag"}).status == 2);
  CHECK(run({"step", "--m", "5"}).status == 2);  // missing --tuple
}

TEST_CASE("help exits with 0") {
  const auto r = run({"--help"});
  CHECK(r.status == 0);
  CHECK(r.out.find("cycle") != std::string::npos);
  CHECK(r.out.find("sweep") != std::string::npos);
}

TEST_CASE("domain errors exit with 1") {
  CHECK(run({"step", "--m", "5", "--tuple", "0,0,9"}).status == 1);
  CHECK(run({"cycle", "--n", "1", "--m", "5"}).status == 1);
}
