#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "knotclasp/json_io.hpp"
#include "knotclasp/pl_function.hpp"
#include "knotclasp/step_function.hpp"

using namespace knotclasp;

namespace {
struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("sig") {
  const auto r = run({"sig", "T(2,3)"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(step_function_from_json(j) == StepFunction({Rational(1, 6), Rational(5, 6)}, {0, -2, 0}));
  CHECK(j["intervals"].size() == 3);
  CHECK(j["intervals"][1]["value"] == -2);

  const auto at = run({"sig", "T(3,7) # -T(4,5)", "--at", "7/40"});
  REQUIRE(at.code == 0);
  CHECK(Json::parse(at.out)["value"] == 2);

  const auto cable = run({"sig", "Cable(2,5;D)"});
  CHECK(cable.code == 2);
  CHECK(cable.err.find("UnsupportedNode") != std::string::npos);

  CHECK(run({"sig", "T(2,3)", "--at", "1/6"}).code == 2);
  CHECK(run({"sig", "T(2,"}).code == 2);
  CHECK(run({"sig", "T(2,3)", "--format", "csv"}).out == "lo,hi,value\n0,1/6,0\n1/6,5/6,-2\n5/6,1,0\n");
  const auto svg = run({"sig", "T(3,7) # -T(4,5)", "--format", "svg"});
  CHECK(svg.code == 0);
  CHECK(svg.out.rfind("<svg", 0) == 0);
  CHECK(svg.out.find("3/20") != std::string::npos);
  CHECK(run({"sig", "T(2,3)", "--format", "xml"}).code == 2);
}

TEST_CASE("upsilon") {
  const auto r = run({"upsilon", "Cable(2,5;D) # -T(2,5) # -D"});
  REQUIRE(r.code == 0);
  const auto u = pl_function_from_json(Json::parse(r.out));
  CHECK(u.breakpoints() ==
        std::vector<Rational>{Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)});
  CHECK(u.values() == std::vector<Rational>{Rational(0), Rational(-1, 2), Rational(1), Rational(-1, 2), Rational(0)});
  CHECK(Json::parse(run({"upsilon", "T(2,7)", "--at", "1/2"}).out)["value"] == "-3/2");
  CHECK(run({"upsilon", "Cable(3,7;D)"}).code == 2);
  CHECK(run({"upsilon", "T(2,5)", "--format", "svg"}).out.find("polyline") != std::string::npos);
}

TEST_CASE("bounds") {
  const auto r = run({"bounds", "T(3,7) # -T(4,5)"});
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["c4_lower"] == 2);
  CHECK(j["g4_lower"] == 1);
  CHECK(j["asserted"]["c4_upper"] == 2);
  const auto k = Json::parse(run({"bounds", "Cable(2,5;D) # -T(2,5) # -D"}).out);
  CHECK(k["c4_lower"] == 2);
  CHECK(k["provenance"][0]["category"] == "smooth only");
  const auto t = Json::parse(run({"bounds", "T(2,3)"}).out);
  CHECK(t["c4plus_lower"] == 1);
  CHECK(t["c4minus_lower"] == 0);
}

TEST_CASE("braid") {
  CHECK(run({"braid", "eq", "-n", "4", "abcabcabcabcabc", "abcabccabcabcbc"}).out == "true\n");
  CHECK(run({"braid", "eq", "-n", "3", "ab", "ba"}).out == "false\n");
  CHECK(run({"braid", "cc", "-n", "4", "abcabccbabcbcbc", "7"}).out == "abcabbabcbcbc\n");
  const auto nf = Json::parse(run({"braid", "nf", "-n", "3", "abaBAB"}).out);
  CHECK(nf["factors"].empty());
  CHECK(nf["infimum"] == 0);
  CHECK(run({"braid", "eq", "-n", "3", "d", "a"}).code == 2);
  CHECK(run({"braid", "cc", "-n", "3", "ab", "9"}).code == 2);
  CHECK(run({"braid"}).code == 2);
}

TEST_CASE("oracle") {
  const auto sig = run({"oracle", "compare-sig", "--pairs", "2,3", "3,7", "--samples", "20"});
  CHECK(sig.code == 0);
  const auto j = Json::parse(sig.out);
  CHECK(j["all_agree"] == true);
  CHECK(j["pairs"][1]["samples"].size() == 20);
  const auto skipped = Json::parse(run({"oracle", "compare-sig", "--pairs", "2,3", "--t", "1/6"}).out);
  CHECK(skipped["pairs"][0]["samples"][0]["status"] == "skipped: breakpoint");
  const auto alex = run({"oracle", "compare-alex", "--pair", "4,5"});
  CHECK(alex.code == 0);
  CHECK(Json::parse(alex.out)["equal"] == true);
  CHECK(run({"oracle", "compare-alex", "--pair", "4,6"}).code == 2);
  CHECK(run({"oracle", "compare-alex", "--pair", "4"}).code == 2);
}

TEST_CASE("reproduce") {
  const auto fig = run({"reproduce", "fig1"});
  CHECK(fig.code == 0);
  const auto j = Json::parse(fig.out);
  CHECK(j.size() == 7);
  for (const auto& c : j) CHECK(c["pass"] == true);

  const auto one = run({"reproduce", "I", "--n-max", "25"});
  CHECK(one.code == 0);
  CHECK(Json::parse(one.out).size() == 50);

  const auto ups = run({"reproduce", "upsilon"});
  CHECK(ups.code == 0);

  // Sorted by caseId.
  const auto two = Json::parse(run({"reproduce", "II", "--n-max", "12"}).out);
  for (std::size_t k = 1; k < two.size(); ++k) CHECK(two[k - 1]["caseId"] < two[k]["caseId"]);

  CHECK(run({"reproduce", "I", "--n-max", "0"}).code == 2);
  CHECK(run({"reproduce", "IV"}).code == 2);
}

TEST_CASE("reproduce III reports the one printed interval that does not hold") {
  const auto r = run({"reproduce", "III"});
  CHECK(r.code == 1);
  const auto j = Json::parse(r.out);
  CHECK(j.size() == 18);
  std::vector<std::string> failed;
  for (const auto& c : j)
    if (!c["pass"].get<bool>()) failed.push_back(c["caseId"]);
  CHECK(failed == std::vector<std::string>{"III/T(2,13)#-T(3,8)/sigma=+2"});
}

TEST_CASE("reproduce all is deterministic") {
  const auto a = run({"reproduce", "all", "--n-max", "3"});
  const auto b = run({"reproduce", "all", "--n-max", "3"});
  CHECK(a.out == b.out);
  CHECK(a.code == 1);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"sig", "--help"}).code == 0);
}
