// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

// Runs the ybe executable and inspects its JSON output.

#include <sys/wait.h>  // for WEXITSTATUS

#include <cstdio>      // for popen
#include <filesystem>  // for temp_directory_path
#include <fstream>     // for ofstream
#include <string>      // for string

#include "catch2/catch_amalgamated.hpp"

#include "nlohmann/json.hpp"

namespace {
  using json = nlohmann::json;

  struct Result {
    int         status;
    std::string out;
  };

  Result run(std::string const& args, std::string const& input = "") {
    auto path = std::filesystem::temp_directory_path() / "ybe_cli_test_input.json";
    {
      std::ofstream f(path);
      f << input;
    }
    std::string cmd = std::string(YBE_CLI_PATH) + " " + args + " < " + path.string() + " 2>/dev/null";
    FILE*       p   = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char        buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, p)) > 0) {
      out.append(buf, got);
    }
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
  }

  json run_json(std::string const& args, std::string const& input = "", int expected_status = 0) {
    auto r = run(args, input);
    CAPTURE(args, r.out);
    REQUIRE(r.status == expected_status);
    return json::parse(r.out);
  }
}  // namespace

TEST_CASE("corpus emit feeds analyze", "[cli]") {
  auto e24 = run("corpus emit e24").out;
  auto a   = run_json("analyze -", e24);
  CHECK(a["n"] == 24);
  CHECK(a["multipermutation_level"] == 3);
  CHECK(a["strong_level"] == 2);
  CHECK(a["abelian"] == true);
  CHECK(a["orbit_count"] == 3);
  CHECK(a["group_order"] == 64);
  CHECK(a["square_free"] == true);
}

TEST_CASE("validate", "[cli]") {
  auto ok = run_json("validate -", R"({"n":2,"sigma":[[1,2],[1,2]]})");
  CHECK(ok["ok"] == true);

  auto bad = run_json("validate -", R"({"n":2,"r":[[[1,2],[2,1]],[[1,2],[2,2]]]})", 2);
  CHECK(bad["ok"] == false);
  CHECK(bad["first_failure"]["kind"] == "NotInvolutive");

  auto degenerate = run("validate -", R"({"n":2,"sigma":[[1,1],[1,2]]})");
  CHECK(degenerate.status == 2);

  CHECK(run("validate -", "not json").status == 1);
}

TEST_CASE("twisted", "[cli]") {
  auto e24 = run("corpus emit e24").out;
  auto t   = run_json("twisted -", e24);
  CHECK(t["decomposable"] == false);
  CHECK(t["mode"] == "squarefree");
  CHECK(t["candidates"].size() == 6);

  auto s4 = run_json("twisted -", run("corpus emit s4").out);
  CHECK(s4["decomposable"] == true);
  CHECK(s4["Y"] == json::parse("[1,2]"));
  CHECK(s4["Z"] == json::parse("[3,4]"));
}

TEST_CASE("retract", "[cli]") {
  auto e24 = run("corpus emit e24").out;
  auto r   = run_json("retract -", e24);
  CHECK(r["n"] == 1);
  auto tower = run_json("retract --trace -", e24);
  REQUIRE(tower.size() == 4);
  CHECK(tower[1]["n"] == 8);
  auto rho = run_json("retract --mode rho --trace -", e24);
  CHECK(rho.size() == 3);
}

TEST_CASE("structure", "[cli]") {
  auto s4 = run("corpus emit s4").out;
  auto x  = run_json("structure - --eval \"x1 x3\"", s4);
  CHECK(x["vec"] == json::parse("[1,0,0,1]"));
  CHECK(x["perm"] == json::parse("[2,1,4,3]"));
  auto rel = run_json("structure - --check-relations", s4);
  CHECK(rel["relations_hold"] == true);
  CHECK(run("structure - --eval \"x9\"", s4).status == 1);
}

TEST_CASE("enumerate", "[cli]") {
  auto two = run_json("enumerate --n 2 --up-to-iso");
  CHECK(two.size() == 1);
  auto four = run_json("enumerate --n 4");
  CHECK(four.size() == 30);

  auto lines = run("enumerate --n 3 --jsonl");
  CHECK(lines.status == 0);
  std::size_t count = 0;
  for (char c : lines.out) {
    count += c == '\n';
  }
  CHECK(count == 4);

  CHECK(run("enumerate --n 7").status == 1);
  CHECK(run("enumerate --n 9 --force").status == 1);
}

TEST_CASE("sweep", "[cli]") {
  auto s = run_json("sweep --n-max 4 --claim rump_decomposable");
  CHECK(s["ok"] == true);
  CHECK(s["failed"] == 0);
  CHECK(s["examined"] == 1 + 1 + 4 + 30);

  auto c = run_json("sweep --n-max 4 --claim conjecture_I_bound --up-to-iso");
  CHECK(c["asserted"] == false);
  CHECK(run("sweep --n-max 3 --claim no_such_claim").status == 1);
}

TEST_CASE("iso", "[cli]") {
  auto path = std::filesystem::temp_directory_path() / "ybe_cli_test_other.json";
  {
    std::ofstream f(path);
    f << R"({"n":4,"sigma":[[1,2,3,4],[1,2,3,4],[2,1,3,4],[2,1,3,4]]})";
  }
  auto r = run_json("iso - " + path.string(), R"({"n":4,"sigma":[[1,2,4,3],[1,2,4,3],[1,2,3,4],[1,2,3,4]]})");
  CHECK(r["isomorphic"] == true);
  auto s = run_json("iso - " + path.string(), run("corpus emit s4").out);
  CHECK(s["isomorphic"] == false);
}
