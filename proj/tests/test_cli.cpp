#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "coxext/cli.hpp"

using namespace coxext;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("pmf command") {
  const auto r = run({"pmf", "A2", "--stat", "inv", "--exact", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("k,count,mass\n0,1,", 0) == 0);
  CHECK(r.out.find("\n3,1,") != std::string::npos);
}

TEST_CASE("describe command") {
  const auto r = run({"describe", "I2(5)"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rank"] == 2);
  CHECK(j["order"] == "10");
  CHECK(j["degrees"] == nlohmann::json::array({2, 5}));
}

TEST_CASE("oracle-verify command") {
  CHECK(run({"oracle-verify", "B2"}).code == 0);
  CHECK(run({"oracle-verify", "A9"}).code == 2);
}

TEST_CASE("usage errors") {
  auto r = run({"pmf", "A2", "--stat", "bogus"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--stat") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  r = run({"describe", "A0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("A") != std::string::npos);
  CHECK(run({"converge", "--seq", "A:n", "--n-list", "100", "--grid", "1:2"}).code == 2);
}

TEST_CASE("converge command csv schema") {
  const auto r = run({"converge", "--seq", "A:n", "--stat", "des", "--n-list", "10,100"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("n,N_n,a,b,sup_error,argmax_x\n10,10,", 0) == 0);
}

TEST_CASE("check command csv schema") {
  const auto r = run({"check", "--seq", "A:n", "--stat", "inv", "--condition", "rank_growth", "--n-list",
                      "1e2..1e5x10"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("n,ratio,verdict\n100,", 0) == 0);
  CHECK(r.out.find("satisfied") != std::string::npos);
}

TEST_CASE("simulate command is reproducible and honours the seed") {
  const std::vector<std::string> args{"simulate", "--seq", "A:n", "--stat", "des", "--n-list", "20",
                                      "--replicates", "30", "--seed", "9", "--format", "csv"};
  const auto a = run(args);
  const auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("n,replicate,value\n20,0,", 0) == 0);
  auto other = args;
  other[10] = "10";
  CHECK(run(other).out != a.out);
}

TEST_CASE("moments, roots, norms, tailratio and normcheck commands") {
  auto r = run({"moments", "I2(5)", "--stat", "inv"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["variance"] == "9/4");

  r = run({"roots", "A2"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["q"].size() == 2);

  r = run({"norms", "--seq", "A:n", "--stat", "inv", "--n", "100"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["alpha"].get<double>() == doctest::Approx(3.0348542587702927));

  r = run({"tailratio", "A50", "--stat", "inv", "--x-list", "1,2"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("x,tail,normal_tail,ratio,smoothed_ratio,beyond_moderate_zone\n1,", 0) == 0);

  r = run({"normcheck", "--m", "5,5,5,5"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["ratio"] == 1.0);
}
