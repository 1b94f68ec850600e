#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "asymk/asymk.hpp"
#include "cli.hpp"
#include "io.hpp"

using namespace asymk;
using asymk::cli::JobSpec;
using asymk::io::Json;

namespace {

const std::string kData = ASYMK_DATA_DIR;

std::string data(const std::string& name) { return kData + "/" + name; }

std::string writeTemp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("asymk_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

JobSpec job(const std::string& command, const std::string& matrix) {
  JobSpec s;
  s.command = command;
  s.matrixPath = data(matrix);
  return s;
}

std::pair<int, std::string> shell(const std::string& args) {
  std::string cmd = std::string(ASYMK_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("kpoly on the first example") {
  auto out = cli::run(job("kpoly", "ex1.json"));
  CHECK(out.exitCode == 0);
  Json j = Json::parse(out.output);
  CHECK(j.at("sum") == "2");
  REQUIRE(j.at("kPoly").size() == 4);
  for (const auto& t : j.at("kPoly")) {
    CHECK(t.at("num") == 1);
    CHECK(t.at("den") == 2);
  }
}

TEST_CASE("kpoly on the degenerate example") {
  auto out = cli::run(job("kpoly", "ex2.json"));
  CHECK(out.exitCode == 2);
  Json j = Json::parse(out.output);
  CHECK(j.at("error").at("kind") == "DegenerateMap");
  CHECK(j.at("error").at("witness") == Json::array({1, 0}));
}

TEST_CASE("phi with r = 1 echoes F") {
  JobSpec s = job("phi", "ex1.json");
  s.polyPath = data("one.json");
  s.r = 1;
  auto out = cli::run(s);
  CHECK(out.exitCode == 0);
  CHECK(Json::parse(out.output).at("phi") == io::readFile(data("one.json")));

  s.polyPath = data("veronese_F.json");
  s.matrixPath = data("veronese.json");
  out = cli::run(s);
  CHECK(Json::parse(out.output).at("phi") == io::readFile(data("veronese_F.json")));
}

TEST_CASE("error exit codes") {
  JobSpec s;
  s.command = "kpoly";
  s.matrixPath = writeTemp("cyclic.json", R"({"matrix": [[1, -1]]})");
  auto out = cli::run(s);
  CHECK(out.exitCode == 1);
  CHECK(Json::parse(out.output).at("error").at("kind") == "NotAcyclic");
  CHECK(Json::parse(out.output).at("error").at("witness") == Json::array({1, 1}));

  s.matrixPath = writeTemp("broken.json", R"({"matrix": [[1, 2)");
  CHECK(cli::run(s).exitCode == 1);
  s.matrixPath = writeTemp("ragged.json", R"({"matrix": [[1, 2], [3]]})");
  CHECK(cli::run(s).exitCode == 1);
  s.matrixPath = writeTemp("rank.json", R"({"matrix": [[1, 2], [2, 4]]})");
  CHECK(Json::parse(cli::run(s).output).at("error").at("kind") == "RankDeficient");

  JobSpec big = job("kpoly", "ex1.json");
  big.limits.latticeBoxCap = 3;
  CHECK(cli::run(big).exitCode == 3);

  JobSpec missing = job("phi", "ex1.json");
  CHECK(cli::run(missing).exitCode == 1);
  missing.r = 0;
  CHECK(cli::run(missing).exitCode == 1);
}

TEST_CASE("verification commands report failed checks") {
  JobSpec s = job("concavity", "ex1.json");
  CHECK(cli::run(s).exitCode == 0);
  s.polyPath = writeTemp("gap.json", R"([{"exp": [0, 0], "num": 1, "den": 1}, {"exp": [2, 0], "num": 1, "den": 1}])");
  auto out = cli::run(s);
  CHECK(out.exitCode == 4);
  CHECK(Json::parse(out.output).at("logConcave").at("witness").at("w") == Json::array({1, 0}));

  JobSpec c = job("carries", "carries.json");
  c.r = 2;
  c.r1 = 3;
  c.r2 = 2;
  c.orderPath = data("carries_order.json");
  auto cr = cli::run(c);
  CHECK(cr.exitCode == 0);
  Json j = Json::parse(cr.output);
  CHECK(j.at("semigroup").at("equal") == true);
  CHECK(j.at("carries").at("index") == io::readFile(data("carries_order.json")));
}

TEST_CASE("asymptotic and convergence on the Veronese surface") {
  JobSpec a = job("asymptotic", "veronese.json");
  a.expansionPath = data("veronese_exp1.json");
  auto first = cli::run(a);
  a.expansionPath = data("veronese_exp2.json");
  auto second = cli::run(a);
  CHECK(first.exitCode == 0);
  CHECK(Json::parse(first.output).at("limit") == Json::parse(second.output).at("limit"));

  JobSpec c = job("convergence", "veronese.json");
  c.polyPath = data("veronese_F.json");
  c.expansionPath = data("veronese_exp1.json");
  c.rMax = 12;
  auto conv = cli::run(c);
  CHECK(conv.exitCode == 0);
  CHECK(Json::parse(conv.output).at("limitMatchesTarget") == true);
}

TEST_CASE("output is deterministic and keys are sorted") {
  JobSpec s = job("analyze", "carries.json");
  auto a = cli::run(s);
  auto b = cli::run(s);
  CHECK(a.output == b.output);
  Json j = Json::parse(a.output);
  std::string prev;
  for (const auto& [k, v] : j.items()) {
    CHECK(prev < k);
    prev = k;
  }
  s.format = cli::Format::Text;
  auto text = cli::run(s);
  CHECK(text.output.find("latticeIndex") != std::string::npos);
  CHECK(text.output.find('{') != 0);
}

TEST_CASE("serialization round trips") {
  IntMatrix m = fromInt64Rows({{2, -1, 0}, {0, 1, 2}});
  m(0, 0) = Integer("123456789012345678901234567890");
  CHECK(io::matrixFromJson(Json::parse(io::matrixToJson(m).dump())) == m);

  LaurentPoly f = LaurentPoly::monomial({1, -2}, Rational(-3, 7)) + LaurentPoly::monomial({0, 0}, 5);
  CHECK(io::polyFromJson(Json::parse(io::toJson(f).dump()), 2) == f);

  AsymptoticExpansion e{3, {{{1, 2, 5}, 2}, {{2, 5, 6}, 2}}};
  Json ej = io::toJson(e);
  CHECK(io::toJson(io::expansionFromJson(ej)) == ej);

  CarriesMatrix c = buildCarries(buildConfig(std::vector<Exponent>{{1, 1, 0, 0, -1}, {0, 0, 1, 1, 1}}), 3);
  CarriesMatrix back = io::carriesFromJson(Json::parse(io::toJson(c).dump()));
  CHECK(back.r == c.r);
  CHECK(back.index == c.index);
  CHECK(back.entries == c.entries);

  CHECK(io::rationalFromJson(Json{{"num", 4}, {"den", 6}}) == Rational(2, 3));
  CHECK_THROWS_AS(io::rationalFromJson(Json{{"num", 1}, {"den", 0}}), Error);
}

TEST_CASE("the installed binary") {
  auto [code, out] = shell("kpoly --matrix " + data("ex1.json"));
  CHECK(code == 0);
  CHECK(Json::parse(out).at("sum") == "2");
  auto [code2, out2] = shell("kpoly --matrix " + data("ex2.json"));
  CHECK(code2 == 2);
  CHECK(Json::parse(out2).at("error").at("kind") == "DegenerateMap");
  auto [code3, out3] = shell("phi --matrix " + data("ex1.json") + " --poly " + data("one.json") + " --r 1");
  CHECK(code3 == 0);
  CHECK(Json::parse(out3).at("phi") == io::readFile(data("one.json")));
}
