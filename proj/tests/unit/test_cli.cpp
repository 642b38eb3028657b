#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using namespace losemilat::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("solve") {
  auto r = call({"solve", "--l", "3", "x1x2 = x1x3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("17 points") != std::string::npos);
  CHECK(has_line(r.out, "(a1,a1,a1)"));
  CHECK(has_line(r.out, "(a3,a2,a2)"));

  r = call({"solve", "--l", "2", "--quiet", "x1 <= x2", "x2 <= x1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "V(x1*x2 = x1, x1*x2 = x2) in L_2^2: 2 points\n");

  r = call({"solve", "--l", "3", "--n", "3", "--json", "x1 = x2"});
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out).size() == 9);
}

TEST_CASE("solve errors") {
  CHECK(call({"solve", "--l", "3", "x1 <= x2 <= x3"}).code == kExitParseError);
  CHECK(call({"solve", "--l", "3", "x1 = y2"}).code == kExitParseError);
  CHECK(call({"solve", "--l", "3", "--n", "1", "x1 = x2"}).code == kExitParseError);
  CHECK(call({"solve", "--l", "0", "x1 = x2"}).code == kExitParseError);
  CHECK(call({"solve", "x1 = x2"}).code == kExitParseError);
  CHECK(call({"solve", "--l", "10", "--n", "8", "x1 = x2"}).code == kExitCapExceeded);
  CHECK(call({"solve", "--l", "3", "--max-points", "8", "x1 = x2x3"}).code == kExitCapExceeded);
  CHECK(call({"bogus"}).code == kExitParseError);
  CHECK(call({}).code == kExitParseError);
}

TEST_CASE("the point cap can come from the environment") {
  ::setenv("LOSEMILAT_MAX_POINTS", "8", 1);
  const auto capped = call({"solve", "--l", "3", "x1 = x2x3"});
  ::unsetenv("LOSEMILAT_MAX_POINTS");
  CHECK(capped.code == kExitCapExceeded);
  CHECK(call({"solve", "--l", "3", "x1 = x2x3"}).code == kExitOk);
}

TEST_CASE("decompose") {
  auto r = call({"decompose", "--l", "3", "x1x2 = x1x3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("x2=x3<=x1") != std::string::npos);
  CHECK(r.out.find("witness (a3,a2,a2)") != std::string::npos);
  CHECK(r.out.find("components: 3, Irr(1,1,3) = 3") != std::string::npos);

  r = call({"decompose", "--l", "5", "--json", "x1x2 = x1x3"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 3);
  CHECK(j["formula"] == "3");
  CHECK(j["components"][2]["sigma"] == nlohmann::json::array({2, 3, 1}));
  CHECK(j["components"][2]["witness"] == nlohmann::json::array({3, 2, 2}));

  r = call({"decompose", "--l", "2", "x1x2x3 = x1"});
  CHECK(r.code == kExitUnsupportedRegime);
  CHECK(r.err.find("n <= l") != std::string::npos);
  CHECK(call({"decompose", "--l", "3", "x1 = x3"}).code == kExitUnsupportedRegime);
  CHECK(call({"decompose", "--l", "3", "x1 = x2", "x2 = x3"}).code == kExitParseError);
}

TEST_CASE("gamma") {
  auto r = call({"gamma", "--l", "3", "x1 <= x2", "x2 <= x3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("3 classes, a chain, irreducible") != std::string::npos);
  r = call({"gamma", "--l", "3", "--quiet", "x1x2 = x1x3"});
  CHECK(r.out.find("not a chain, reducible") != std::string::npos);
  r = call({"gamma", "--l", "2", "--json", "x1 = x1"});
  CHECK(nlohmann::json::parse(r.out)["irreducible"] == true);
}

TEST_CASE("table") {
  auto r = call({"table", "--l", "3", "--n", "3", "--json"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rows"].size() == 25);
  std::size_t total = 0;
  for (const auto& row : j["rows"]) total += row["count"].get<std::size_t>();
  CHECK(total == 72);
  CHECK(j["total_components"] == 72);
  CHECK(j["average"]["num"] == "72");
  CHECK(j["average"]["den"] == "25");

  r = call({"table", "--l", "3", "--n", "3"});
  CHECK(r.out.find("equations: 25, components: 72, average 72/25 = 2.88") != std::string::npos);

  r = call({"table", "--l", "1", "--n", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("equations: 1, components: 1") != std::string::npos);

  r = call({"table", "--l", "2", "--n", "2", "--oracle", "--json"});
  CHECK(r.code == kExitOk);
  for (const auto& row : nlohmann::json::parse(r.out)["rows"]) CHECK(row["oracle"] == "ok");

  CHECK(call({"table", "--l", "2", "--n", "3"}).code == kExitUnsupportedRegime);
  CHECK(call({"table", "--l", "5", "--n", "5"}).code == kExitCapExceeded);
}

TEST_CASE("stats") {
  auto r = call({"stats", "--n", "3"});
  CHECK(r.code == kExitOk);
  CHECK(has_line(r.out, "average components: 72/25 = 2.88"));
  CHECK(r.out.find("(agrees)") != std::string::npos);
  r = call({"stats", "--n", "2", "--json"});
  CHECK(nlohmann::json::parse(r.out)["avg_irr"]["num"] == "8");
  r = call({"stats", "--n", "20"});
  CHECK(r.code == kExitOk);
  CHECK(has_line(r.out, "equations: 3486784399"));
  CHECK(call({"stats", "--n", "1"}).code == kExitParseError);
}

TEST_CASE("verify") {
  auto r = call({"verify", "--n", "3", "--l", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("components: 72 over 25 equations") != std::string::npos);
  CHECK(call({"verify", "--n", "2", "--l", "4"}).code == kExitOk);
  CHECK(call({"verify", "--n", "4", "--l", "3"}).code == kExitUnsupportedRegime);
}

TEST_CASE("enumerate") {
  auto r = call({"enumerate", "--n", "2", "--json"});
  CHECK(r.code == kExitOk);
  CHECK(nlohmann::json::parse(r.out).size() == 7);
  r = call({"enumerate", "--n", "3"});
  CHECK(has_line(r.out, "25 equations"));
  CHECK(call({"enumerate", "--n", "13"}).code == kExitCapExceeded);
}

TEST_CASE("JSON output is stable across runs") {
  const std::vector<std::string> args{"decompose", "--l", "4", "--json", "x1x2 = x1x2x3x4"};
  CHECK(call(args).out == call(args).out);
}
