#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

using qeuler::cli::kExitFailure;
using qeuler::cli::kExitPass;
using qeuler::cli::kExitUsage;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = qeuler::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::filesystem::path(QEULER_GOLDEN_DIR) / name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("table output matches golden files") {
  auto csv = run({"table", "--kind", "euler-q", "--n-max", "4", "--format", "csv"});
  CHECK(csv.code == kExitPass);
  CHECK(csv.out == golden("euler_q_4.csv"));

  auto json = run({"table", "--kind", "euler-q", "--n-max", "2", "--format", "json"});
  CHECK(json.code == kExitPass);
  CHECK(json.out == golden("euler_q_2.json"));

  auto text = run({"table", "--kind", "beta-q", "--n-max", "3", "--format", "text"});
  CHECK(text.out == golden("beta_q_3.txt"));
  CHECK(text.out.find("beta_{1,q} = (-1)/(q + 1)") != std::string::npos);

  auto tex = run({"table", "--kind", "carlitz-h", "--u", "2/1", "--n-max", "2", "--format",
                  "latex"});
  CHECK(tex.out == golden("carlitz_h_2.tex"));
}

TEST_CASE("table csv rows") {
  auto r = run({"table", "--kind", "euler-q", "--n-max", "2", "--format", "csv"});
  CHECK(r.out ==
        "n,num,den,limit_q1\n0,1,1,1\n1,-q,q^2 + 1,-1/2\n2,q^2 - q,q^4 - q^3 + 2*q^2 - q + 1,0\n");
  auto zero = run({"table", "--kind", "euler-q", "--n-max", "0", "--format", "json"});
  auto j = nlohmann::ordered_json::parse(zero.out);
  CHECK(j["values"].size() == 1);
  CHECK(j["values"][0]["num"][0] == "1");
}

TEST_CASE("table writes to a file") {
  auto path = std::filesystem::temp_directory_path() / "qeuler_cli_table.csv";
  std::filesystem::remove(path);
  auto r = run({"table", "--kind", "euler-q", "--n-max", "4", "--format", "csv", "--out",
                path.string()});
  CHECK(r.code == kExitPass);
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == golden("euler_q_4.csv"));
  std::filesystem::remove(path);
}

TEST_CASE("table usage errors") {
  CHECK(run({"table", "--kind", "carlitz-h", "--n-max", "2"}).code == kExitUsage);
  CHECK(run({"table", "--kind", "nope", "--n-max", "2"}).code == kExitUsage);
  CHECK(run({"table", "--kind", "euler-q"}).code == kExitUsage);
  CHECK(run({"table", "--kind", "euler-q", "--n-max", "2", "--bogus"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
}

TEST_CASE("eval") {
  auto one = run({"eval", "--n", "1", "--q-exact", "1/1"});
  CHECK(one.code == kExitPass);
  CHECK(one.out == "-1/2\n");
  CHECK(run({"eval", "--n", "1", "--q-exact", "2/1"}).out == "-2/5\n");
  CHECK(run({"eval", "--n", "1", "--q-exact", "2", "--x", "1"}).out == "1/5\n");

  auto c = run({"eval", "--n", "0", "--q-complex", "0.5,0", "--terms", "100"});
  CHECK(c.code == kExitPass);
  CHECK(c.out.rfind("re=1 ", 0) == 0);
  CHECK(c.out.find("M=100") != std::string::npos);

  auto auto_m = run({"eval", "--n", "3", "--q-complex", "0.3,0.2"});
  CHECK(auto_m.code == kExitPass);
  CHECK(auto_m.out.find("tail_bound=") != std::string::npos);

  CHECK(run({"eval", "--n", "1", "--q-complex", "1.0,0"}).code == kExitUsage);
  CHECK(run({"eval", "--n", "1", "--q-complex", "0.9,0", "--terms", "3"}).code == kExitUsage);
  CHECK(run({"eval", "--n", "1"}).code == kExitUsage);
  CHECK(run({"eval", "--n", "1", "--q-exact", "1/0"}).code == kExitUsage);
  CHECK(run({"eval", "--n", "1", "--q-exact", "1", "--q-complex", "0.1,0"}).code == kExitUsage);
}

TEST_CASE("eval rejects malformed rationals") {
  CHECK(run({"eval", "--n", "2", "--q-exact", "abc"}).code == kExitUsage);
  CHECK(run({"eval", "--n", "2", "--q-exact", "1/"}).code == kExitUsage);
}

TEST_CASE("verify") {
  auto eq16 = run({"verify", "--suite", "eq16", "--n-max", "30"});
  CHECK(eq16.code == kExitPass);
  auto j = nlohmann::ordered_json::parse(eq16.out);
  CHECK(j["summary"]["total"] == 31);
  CHECK(j["summary"]["passed"] == 31);

  auto trivial = run({"verify", "--suite", "eq19", "--n-max", "1", "--m-max", "0"});
  CHECK(trivial.code == kExitPass);
  CHECK(nlohmann::ordered_json::parse(trivial.out)["summary"]["total"] == 1);

  CHECK(run({"verify", "--suite", "eq19", "--n", "2"}).code == kExitUsage);
  CHECK(run({"verify", "--suite", "eq21", "--n", "3"}).code == kExitUsage);
  CHECK(run({"verify", "--suite", "eq16-1", "--n", "1,2,3", "--m-max", "4"}).code == kExitPass);
  CHECK(run({"verify", "--suite", "compare", "--m-max", "2", "--format", "text"}).code ==
        kExitPass);
  CHECK(run({"verify", "--suite", "eq99"}).code == kExitUsage);
}

TEST_CASE("verify output is deterministic") {
  auto a = run({"verify", "--suite", "eq21", "--m-max", "5"});
  auto b = run({"verify", "--suite", "eq21", "--m-max", "5"});
  CHECK(a.out == b.out);
}

TEST_CASE("padic") {
  auto r = run({"padic", "--p", "5", "--q", "6/1", "--n-max-level", "4", "--moment", "1"});
  CHECK(r.code == kExitPass);
  CHECK(r.out == golden("padic_5_6_m1.json"));

  CHECK(run({"padic", "--p", "5", "--q", "7/1", "--moment", "1"}).code == kExitUsage);
  CHECK(run({"padic", "--p", "4", "--q", "5/1", "--moment", "1"}).code == kExitUsage);
  CHECK(run({"padic", "--p", "5", "--q", "6/1", "--moment", "1", "--measure", "x"}).code ==
        kExitUsage);

  auto exact = run({"padic", "--p", "3", "--q", "4/1", "--moment", "0", "--measure", "bosonic"});
  CHECK(exact.code == kExitPass);
  auto j = nlohmann::ordered_json::parse(exact.out);
  CHECK(j["pass"] == true);
  for (const auto& level : j["levels"]) CHECK(level["gap"] == "inf");

  // With a single level the rule is gap >= 0, which an m = 1 sum meets.
  CHECK(run({"padic", "--p", "3", "--q", "4/1", "--n-max-level", "1", "--moment", "1",
             "--shift", "1"})
            .code == kExitPass);
}

TEST_CASE("series") {
  auto r = run({"series", "--q", "0.5,0", "--n-max", "25", "--t", "1,0"});
  CHECK(r.code == kExitPass);
  auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["max_abs_dev"].get<double>() <= 1e-8);
  CHECK(j["n_max"] == 25);

  auto grid = run({"series", "--q", "0.3,0", "--n-max", "20", "--terms", "300"});
  CHECK(grid.code == kExitPass);
  CHECK(nlohmann::ordered_json::parse(grid.out)["max_abs_dev"].get<double>() <= 1e-9);

  CHECK(run({"series", "--q", "1.5,0"}).code == kExitUsage);
  CHECK(run({"series", "--q", "0.5"}).code == kExitUsage);
}

TEST_CASE("failure exit status") {
  // A deliberately too-short expansion fails the deviation threshold.
  auto r = run({"series", "--q", "0.5,0", "--n-max", "2", "--t", "1,0"});
  CHECK(r.code == kExitFailure);
}

}  // TEST_SUITE
