#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "darboux/cli.hpp"
#include "darboux/corpus.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "darboux");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::string sys(const std::string& name) { return std::string(DARBOUX_DATA_DIR) + "/systems/" + name + ".dhs"; }

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("cofactor") {
    auto r = run({"cofactor", "--system", sys("s3"), "--poly", "i*p2 + sqrt(2)*q2^2", "--output", "json"});
    REQUIRE(r.status == 0);
    auto j = json_of(r);
    CHECK(j["command"] == "cofactor");
    CHECK(j["results"][0]["kind"] == "darboux");
    CHECK(j["results"][0]["cofactor"] == "-2*i*sqrt(2)*q2");
    auto neg = run({"cofactor", "--system", sys("s3"), "--poly", "q1 + p1", "--output", "json"});
    CHECK(neg.status == 0);
    CHECK(json_of(neg)["results"][0]["kind"] == "not-darboux");
  }

  TEST_CASE("verify-integral") {
    auto r = run({"verify-integral", "--system", sys("s2"), "--poly", "q1*p2 - q2*p1", "--output", "json"});
    REQUIRE(r.status == 0);
    CHECK(json_of(r)["results"][0]["verdict"] == "true");
    auto f = run({"verify-integral", "--system", sys("s3"), "--poly", "p2^2 + 2*q2^2", "--output", "json"});
    CHECK(f.status == 0);
    CHECK(json_of(f)["results"][0]["verdict"] == "false");
  }

  TEST_CASE("search report schema") {
    auto r = run({"search", "--system", sys("s1"), "--gamma-degree", "4", "--output", "json"});
    REQUIRE(r.status == 0);
    auto j = json_of(r);
    CHECK(j["system"]["m"] == 2);
    CHECK(j["system"]["field"] == "Q");
    CHECK(j["system"]["V"] == "q1^4");
    CHECK(j["system"]["degV"] == 4);
    REQUIRE(j["results"].size() == 1);
    CHECK(j["results"][0]["poly"] == "p2");
    CHECK(j["results"][0]["cofactor"] == "0");
    CHECK(j["residual_conditions"] == nlohmann::json::array({"l1^2 + 8"}));
    CHECK(j["timing_ms"].is_null());
    auto ext = json_of(run({"search", "--system", sys("s1-ext"), "--gamma-degree", "4", "--output", "json"}));
    CHECK(ext["results"].size() == 3);
  }

  TEST_CASE("byte-identical JSON and re-parsable polynomials") {
    const std::vector<std::string> args = {"search", "--system", sys("s5"), "--gamma-degree", "8", "--output", "json"};
    auto a = run(args), b = run(args);
    REQUIRE(a.status == 0);
    CHECK(a.out == b.out);
    auto s5 = load_builtin("s5");
    auto j = json_of(a);
    REQUIRE(j["results"].size() >= 2);
    for (const auto& e : j["results"]) {
      Poly f = P(s5, e["poly"].get<std::string>());
      CHECK(format_poly(f) == e["poly"].get<std::string>());
      Poly c = P(s5, e["cofactor"].get<std::string>());
      CHECK(lie_derivative(s5, f) == c * f);
    }
  }

  TEST_CASE("other commands") {
    auto rev = run({"reversal", "--system", sys("s3"), "--poly", "i*p2 + sqrt(2)*q2^2", "--output", "json"});
    REQUIRE(rev.status == 0);
    CHECK(json_of(rev)["results"][0]["poly"] == "p2^2 + 2*q2^4");
    auto ind = run({"independence", "--system", sys("s2"), "--poly", "q1*p2 - q2*p1", "--output", "json"});
    REQUIRE(ind.status == 0);
    CHECK(json_of(ind)["results"][0]["verdict"] == "independent");
    auto irr = run({"irreducible", "--system", sys("reducible"), "--output", "json"});
    REQUIRE(irr.status == 0);
    CHECK(json_of(irr)["results"][0]["verdict"] == "reducible");
    auto t1 = run({"theorem1", "--system", sys("cubic"), "--max-gamma-degree", "6", "--output", "json"});
    REQUIRE(t1.status == 0);
    CHECK(json_of(t1)["results"][0]["verdict"] == "consistent-with-theorem");
    auto t2 = run({"theorem2", "--system", sys("s1"), "--poly", "p2", "--output", "json"});
    REQUIRE(t2.status == 0);
    CHECK(json_of(t2)["results"][0]["verdict"] == "hypotheses-not-met");
    auto num = run({"numcheck", "--system", sys("s2"), "--poly", "q1*p2 - q2*p1", "--output", "json"});
    REQUIRE(num.status == 0);
    CHECK(json_of(num)["results"][0]["verdict"] == "conserved");
    auto text = run({"cofactor", "--system", sys("s3"), "--poly", "i*p2 + sqrt(2)*q2^2"});
    CHECK(text.status == 0);
    CHECK(text.out.find("-2*i*sqrt(2)*q2") != std::string::npos);
  }

  TEST_CASE("examples") {
    auto r = run({"examples", "--output", "json"});
    CHECK(r.status == 0);
    auto j = json_of(r);
    for (const auto& e : j["results"]) CHECK(e["verdict"] == "pass");
  }

  TEST_CASE("exit codes for operational failures") {
    CHECK(run({"cofactor", "--system", sys("s3"), "--poly", "2q1"}).status == 1);
    CHECK(run({"cofactor", "--system", sys("s3"), "--poly", "q3"}).status == 1);
    CHECK(run({"cofactor", "--system", "/nonexistent.dhs", "--poly", "q1"}).status == 1);
    CHECK(run({"search", "--system", sys("s1")}).status == 1);
    CHECK(run({"search", "--system", sys("s1"), "--gamma-degree", "4", "--max-gamma-degree", "4"}).status == 1);
    CHECK(run({"numcheck", "--system", sys("s2"), "--poly", "p1", "--h", "-1"}).status == 1);
    CHECK(run({"frobnicate"}).status == 1);
    CHECK(run({"cofactor", "--system", sys("s3"), "--poly", "0"}).status == 1);
    auto aborted = run({"search", "--system", sys("s1-ext"), "--gamma-degree", "4", "--branch-cap", "1", "--output", "json"});
    CHECK(aborted.status == 1);
    CHECK_FALSE(aborted.err.empty());
    auto parse = run({"cofactor", "--system", sys("s3"), "--poly", "q1 + $"});
    CHECK(parse.err.find("1:6") != std::string::npos);
  }
}
