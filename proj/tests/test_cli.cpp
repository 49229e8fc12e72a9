#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "netsemi/cli.hpp"

using namespace netsemi;

namespace {

struct TempNet {
  std::filesystem::path path;
  explicit TempNet(const std::string& text) {
    path = std::filesystem::temp_directory_path() /
           ("netsemi_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter++) + ".net");
    std::ofstream out(path);
    out << text;
  }
  ~TempNet() { std::filesystem::remove(path); }
  std::string str() const { return path.string(); }
  static int counter;
};
int TempNet::counter = 0;

const char* kExample =
    "vertices v1 v2 v3 v4\n"
    "rel t1 : v1 v2 -> v3\n"
    "rel t2 : v3 -> v4\n";

struct CliResult {
  int status;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("nf prints the normal form") {
  TempNet net(kExample);
  auto res = cli({"nf", "--network", net.str(), "~t2 ~t1 t1 t2"});
  CHECK(res.status == 0);
  CHECK(res.out == "{v4}\n");

  res = cli({"nf", "--network", net.str(), "--trace", "~t1", "t2"});
  CHECK(res.status == 0);
  CHECK(res.out.find("rule=NR3") != std::string::npos);
  CHECK(res.out.find("\n0\n") != std::string::npos);
}

TEST_CASE("mul, star and props") {
  TempNet net(kExample);
  auto res = cli({"mul", "--network", net.str(), "t1 | t1", "t1 t2 | t1 t2"});
  CHECK(res.status == 0);
  CHECK(res.out == "t1 t2 | t1 t2\n");

  res = cli({"star", "--network", net.str(), "t1 t2 | t2"});
  CHECK(res.out == "t2 | t2\n");

  res = cli({"props", "--network", net.str(), "t1 t2 | t2"});
  CHECK(res.out.find("regular: yes") != std::string::npos);
  CHECK(res.out.find("inverse: t2 | t1 t2") != std::string::npos);
  CHECK(res.out.find("in_R: yes") != std::string::npos);
}

TEST_CASE("enum lists the inverse-part ball") {
  TempNet net(kExample);
  auto res = cli({"enum", "--network", net.str(), "--ball", "4", "--sub", "R"});
  CHECK(res.status == 0);
  std::istringstream lines(res.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++count;
  CHECK(count == 6);
  CHECK(res.out.find("t2 | t1 t2") != std::string::npos);
}

TEST_CASE("confluence and ideal verification exit codes") {
  TempNet net(kExample);
  auto res = cli({"confluence", "--network", net.str()});
  CHECK(res.status == 0);
  CHECK(res.out.find("verdict: PASS") != std::string::npos);

  res = cli({"ideal", "--network", net.str(), "principal:t2", "--carrier",
             "S", "--verify"});
  CHECK(res.status == 0);
  CHECK(res.out.find("star_closure: PASS") != std::string::npos);

  res = cli({"ideal", "--network", net.str(), "principal:t1"});
  CHECK(res.status == 1);
  CHECK(res.err.find("HypothesisViolated") != std::string::npos);
}

TEST_CASE("iso reports the bijection and preservation check") {
  TempNet g(kExample);
  TempNet d(
      "vertices w1 w2 w3 w4\n"
      "rel s1 : w1 w2 -> w3\n"
      "rel s2 : w3 -> w4\n");
  TempNet g2("vertices a b\nrel e : a -> b\n");

  auto res = cli({"iso", g.str(), d.str()});
  CHECK(res.status == 0);
  CHECK(res.out.find("t1 -> s1") != std::string::npos);
  CHECK(res.out.find("products preserved on ball 3: PASS") !=
        std::string::npos);
  CHECK(res.out.find("skeleton comparison agrees: PASS") != std::string::npos);

  res = cli({"iso", g.str(), g2.str()});
  CHECK(res.status == 1);
  CHECK(res.out.find("no isomorphism") != std::string::npos);
  CHECK(res.out.find("skeleton comparison agrees: PASS") != std::string::npos);
}

TEST_CASE("example6 reproduces the fixture") {
  auto res = cli({"example6"});
  CHECK(res.status == 0);
  CHECK(res.out.find("T0: {v1} {v1,v2} {v2} {v3} {v4}") != std::string::npos);
  CHECK(res.out.find("R ball-4 (6 elements)") != std::string::npos);
  CHECK(res.out.find("carrier Q (14 elements)") != std::string::npos);
  CHECK(res.out.find("carrier S (9 elements)") != std::string::npos);
  CHECK(res.out.find("carrier R (5 elements)") != std::string::npos);
  CHECK(res.out.find("strict inclusions on ball-4: R in S: PASS, S in Q: PASS") !=
        std::string::npos);
  CHECK(res.out.find("in S not R: {v3} | t1") != std::string::npos);
  CHECK(res.out.find("in Q not S: t1 | {v3}") != std::string::npos);
}

TEST_CASE("json reports round-trip byte for byte") {
  TempNet net(kExample);
  TempNet renamed(
      "vertices w1 w2 w3 w4\n"
      "rel s1 : w1 w2 -> w3\n"
      "rel s2 : w3 -> w4\n");
  for (auto args : std::vector<std::vector<std::string>>{
           {"nf", "--network", net.str(), "--json", "--trace",
            "~t2 ~t1 t1 t2"},
           {"mul", "--network", net.str(), "--json", "t1 | t1",
            "t1 t2 | t1 t2"},
           {"star", "--network", net.str(), "--json", "t1 t2 | t2"},
           {"enum", "--network", net.str(), "--json", "--sub", "R"},
           {"props", "--network", net.str(), "--json", "t1 | t1"},
           {"order", "--network", net.str(), "--json"},
           {"skeleton", "--network", net.str(), "--json"},
           {"confluence", "--network", net.str(), "--json"},
           {"ideal", "nonlinear", "--network", net.str(), "--json",
            "--verify"},
           {"ideal", "principal:t2", "--network", net.str(), "--json",
            "--carrier", "S", "--verify"},
           {"iso", "--json", net.str(), renamed.str()},
           {"example6", "--json"}}) {
    auto res = cli(args);
    REQUIRE(res.status == 0);
    auto parsed = nlohmann::json::parse(res.out);
    CHECK(parsed.dump(2) + "\n" == res.out);
    CHECK(parsed.contains("command"));
    CHECK(parsed.contains("network"));
    CHECK(parsed.contains("result"));
    CHECK(parsed.contains("witnesses"));
  }
}

TEST_CASE("usage and parse errors exit with status 2") {
  auto res = cli({"frobnicate"});
  CHECK(res.status == 2);

  res = cli({"nf", "t1"});  // missing --network
  CHECK(res.status == 2);

  TempNet bad("vertices v1\nrel t : v1 -> v1\n");
  res = cli({"nf", "--network", bad.str(), "t"});
  CHECK(res.status == 2);
  CHECK(res.err.find("SourceRangeOverlap") != std::string::npos);

  TempNet net(kExample);
  res = cli({"nf", "--network", net.str(), "t9"});
  CHECK(res.status == 2);

  res = cli({"mul", "--network", net.str(), "{v3} | t2", "t2 | t2"});
  CHECK(res.status == 1);
  CHECK(res.err.find("NonCanonicalOperand") != std::string::npos);
}
