#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(ARRSTAB_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const std::string& args) {
  const auto r = run(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_CASE("poset command") {
  const auto j = json_of("poset --family A --space linear --n 3");
  CHECK(j["schema_version"] == 1);
  CHECK(j["paper_case"]["family"] == "A");
  CHECK(j["paper_case"]["space"] == "linear");
  CHECK(j["config"]["n"] == 3);
  CHECK(j["result"]["elements"].size() == 5);

  const auto table = run("poset --family C --space toric --n 2 --format table");
  CHECK(table.code == 0);
  std::size_t rows = 0;
  for (std::size_t pos = 0; (pos = table.out.find("\n  ", pos)) != std::string::npos; ++pos) ++rows;
  CHECK(rows == 11);
  CHECK(table.out.find("rank 0 (1)") != std::string::npos);
  CHECK(table.out.find("rank 1 (6)") != std::string::npos);
  CHECK(table.out.find("rank 2 (4)") != std::string::npos);

  const auto dot = run("poset --family B --space elliptic --n 2 --format dot");
  CHECK(dot.code == 0);
  CHECK(dot.out.rfind("digraph", 0) == 0);
  std::size_t nodes = 0;
  for (std::size_t pos = 0; (pos = dot.out.find("[label=", pos)) != std::string::npos; ++pos) ++nodes;
  CHECK(nodes == 9);
}

TEST_CASE("verify command") {
  CHECK(json_of("verify --family D --space toric --n 3")["result"]["passed"] == true);
  CHECK(json_of("verify --family C --space elliptic --n 2")["result"]["passed"] == true);
  CHECK(json_of("verify --family A --space toric --n 4 --max-rank 2")["result"]["passed"] == true);
  CHECK(run("verify --family A --space toric --n 9").code == 2);
}

TEST_CASE("h command") {
  CHECK(json_of("h --family A --space linear --i 1 --n 5")["result"]["dim"] == "10");
  CHECK(json_of("h --family B --space elliptic --i 1 --n 4")["result"]["dim"] == "14");
  const auto d = json_of("h --family D --space toric --i 1 --n 2")["result"];
  CHECK(d["dim"] == "4");
  std::vector<std::string> names;
  for (const auto& term : d["decomposition"]) names.push_back(term["irrep"].get<std::string>());
  std::sort(names.begin(), names.end());
  CHECK(names == std::vector<std::string>{"((),(2))", "((1),(1))", "((2),())"});
  const auto unsupported = run("h --family A --space elliptic --i 2 --n 3", true);
  CHECK(unsupported.code == 2);
  CHECK(unsupported.out.find("unsupported: elliptic degree ≥ 2") != std::string::npos);
  const auto flagged = json_of("h --family D --space elliptic --i 1 --n 5");
  CHECK(flagged["result"]["dim"] == "15");
  CHECK(flagged["result"].contains("discrepancy"));
  // The degree defaults to one.
  CHECK(run("h --family A --space toric --n 3").out == run("h --family A --space toric --i 1 --n 3").out);
}

TEST_CASE("e2 command") {
  const auto j = json_of("e2 --family B --space toric --p 1 --q 0 --n 2")["result"];
  CHECK(j["dim"] == "2");
  CHECK(j["pieces_match_character"] == true);
}

TEST_CASE("scan command") {
  const auto t = json_of("scan --family A --space toric --i 1 --n 2..8")["result"];
  CHECK(t["onset"] == 4);
  const auto e = json_of("scan --family A --space elliptic --i 1 --n 2..8")["result"];
  CHECK(e["onset"] == 2);
  const auto c = run("scan --family C --space toric --i 1 --n 2..9 --format table");
  CHECK(c.code == 0);
  CHECK(c.out.find("+1*n^2 +2*n") != std::string::npos);
  CHECK(run("scan --family A --space toric --i 2 --n 2..2").code == 2);
  CHECK(run("scan --family A --space toric --i 1 --n 5..3").code == 2);
}

TEST_CASE("char-table and snf commands") {
  const auto w2 = json_of("char-table --group W --n 2");
  CHECK(w2["result"]["characters"].size() == 5);
  CHECK(w2["paper_case"]["family"].is_null());
  const auto snf = json_of("snf '[[2,4],[6,8]]'")["result"];
  CHECK(snf["invariant_factors"] == nlohmann::json::array({2, 4}));
  const auto piped = run("snf < /dev/null");
  CHECK(piped.code == 2);
  CHECK(run("snf '[[1],[2,3]]'").code == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("poset --family Q --space toric --n 2").code == 2);
  CHECK(run("poset --family A --space torus --n 2").code == 2);
  CHECK(run("poset --family A --space toric --n 2 --format dotty").code == 2);
  CHECK(run("h --family A --space toric").code == 2);
  CHECK(run("h --family A --space toric --n two").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("h --family D --space toric --i 1 --n 1").code == 2);
}

TEST_CASE("output is deterministic and --out writes the same bytes") {
  const std::string args = "h --family B --space toric --i 1 --n 3";
  const auto a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto path = std::filesystem::temp_directory_path() / "arrstab_cli_io_test.json";
  std::filesystem::remove(path);
  CHECK(run(args + " --out " + path.string()).code == 0);
  std::ifstream in(path);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(written == a.out);
  std::filesystem::remove(path);
}
