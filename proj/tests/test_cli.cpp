#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "hfk/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hfk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hfk::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

}  // namespace

TEST_CASE("relations golden table") {
  const auto r = run({"relations", "--braid", "b=3; 1 -2 1 -2", "--method", "regions"});
  CHECK(r.code == 0);
  const std::vector<std::string> expected = {"t^10*x3*x9 - x0*x6", "t^11*x9 - x0", "t^6*x1*x7 - x4*x10",
                                             "t^8*x1*x9 - x4*x6", "t^8*x3*x7 - x0*x10"};
  CHECK(lines(r.out) == expected);
  CHECK(lines(run({"relations", "--braid", "b=3; 1 -2 1 -2", "--method", "cycles"}).out) == expected);
  CHECK(lines(run({"relations", "--braid", "b=3; 1 -2 1 -2", "--resolution", "0101"}).out) == expected);
}

TEST_CASE("relations options") {
  const auto closed = run({"relations", "--braid", "b=2; 1", "--resolution", "1"});
  CHECK(closed.code == 0);
  CHECK(lines(closed.out) == std::vector<std::string>{"t - 1"});
  CHECK(run({"relations", "--braid", "b=2; 1", "--resolution", "10"}).code == 2);
  CHECK(run({"relations", "--braid", "b=2; 1", "--method", "nope"}).code == 2);
  const auto capped = run({"relations", "--braid", "b=3; 1 -2 1 -2", "--method", "subsets", "--all-subsets",
                           "--subset-cap", "10"});
  CHECK(capped.code == 1);
  CHECK_FALSE(capped.err.empty());
}

TEST_CASE("compute JSON schema") {
  const auto r = run({"compute", "--braid", "b=3; 1 -2 1 -2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("braid") == "b=3; 1 -2 1 -2");
  CHECK(j.at("reduced") == true);
  CHECK(j.at("total_dim") == 5);
  CHECK(j.at("chain_dim") == 17);
  CHECK(j.at("match") == true);
  long long sum = 0;
  for (const auto& rec : j.at("records")) {
    CHECK(rec.contains("alexander_x2"));
    CHECK(rec.contains("homological"));
    sum += rec.at("dim").get<long long>();
  }
  CHECK(sum == 5);
  CHECK(j.at("alexander") == nlohmann::json::parse("[[-1,-1],[0,3],[1,-1]]"));
}

TEST_CASE("compute text and csv") {
  const auto t = run({"compute", "--braid", "b=2; 1 1 1"});
  CHECK(t.code == 0);
  CHECK(lines(t.out).back() == "MATCH");
  const auto c = run({"compute", "--braid", "b=2; 1 1 1", "--format", "csv"});
  CHECK(c.code == 0);
  CHECK(lines(c.out).size() == 4);
  const auto u = run({"compute", "--braid", "b=2; 1", "--unreduced"});
  CHECK(u.code == 0);
  CHECK(u.out.find("1/(1 - q)") != std::string::npos);
}

TEST_CASE("other subcommands and exit codes") {
  const auto a = run({"alexander", "--braid", "b=3; 1 -2 1 -2"});
  CHECK(a.code == 0);
  CHECK(lines(a.out) == std::vector<std::string>{"-q^-1 + 3 - q"});
  CHECK(run({"dump-diagram", "--braid", "b=3; 1 -2 1 -2"}).code == 0);
  CHECK(run({"dump-diagram", "--braid", "b=3; 1 -2 1 -2", "--resolution", "singular"}).code == 0);
  CHECK(run({"compute", "--braid", "b=3; 1 1 1"}).code == 2);
  CHECK(run({"compute", "--braid", "b=2; x"}).code == 2);
  CHECK(run({"compute"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  const auto inv = run({"check-invariance", "--braid", "b=2; 1 1 1", "--auto", "--moves", "3", "--seed", "7"});
  CHECK(inv.code == 0);
  CHECK(lines(inv.out).size() == 3);
  for (const auto& l : lines(inv.out)) CHECK(l.rfind("PASS", 0) == 0);
  CHECK(run({"check-invariance", "--braid", "b=2; 1 1 1", "--braid", "b=2; 1"}).code == 1);
}
