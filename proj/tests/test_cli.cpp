#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  std::string cmd = env_prefix + std::string(BRIDGECENSUS_CLI) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buffer{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) output.append(buffer.data(), got);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), output};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("normalize") {
  RunResult r = run("normalize 29/81");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "[2,1,3,1,5]"));
  CHECK(contains(r.output, "12"));

  r = run("normalize [3,0,3,-2,3]");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "5/27"));
  CHECK(contains(r.output, "9_6"));
  CHECK(contains(r.output, "crossing number:   9"));

  CHECK(run("normalize 1/4").exit_code == 3);   // link
  CHECK(run("normalize 5/1").exit_code == 3);   // trivial
  CHECK(run("normalize 1x/3").exit_code == 2);  // parse
  CHECK(run("normalize [0]").exit_code == 2);   // no value
}

TEST_CASE("normalize json output is stable and parseable") {
  RunResult r1 = run("normalize 29/81 --format json");
  RunResult r2 = run("normalize 29/81 --format json");
  CHECK(r1.exit_code == 0);
  CHECK(r1.output == r2.output);
  auto record = nlohmann::json::parse(r1.output);
  CHECK(record["schema_version"] == "1");
  CHECK(record["command"] == "normalize");
  CHECK(record["payload"]["fraction"] == "14/81");
  CHECK(record["payload"]["crossing"] == 12);
}

TEST_CASE("epi") {
  RunResult r = run("epi 5/27 1/3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "yes"));
  CHECK(contains(r.output, "c=(0;-1)"));

  r = run("epi 19/45 1/3 --format json");
  auto record = nlohmann::json::parse(r.output);
  CHECK(record["payload"]["admits"] == true);
  CHECK(record["payload"]["witness"]["c"] == nlohmann::json::array({-1, -1}));

  r = run("epi 2/5 1/3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "no"));
}

TEST_CASE("sources") {
  RunResult r = run("sources 1/3 --max-crossing 9");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "3 distinct source knot(s)"));

  r = run("sources 1/3 --max-crossing 11");
  CHECK(contains(r.output, "14 distinct source knot(s)"));  // 3 + 4 + 7

  r = run("sources 3/7 --max-crossing 14");
  CHECK(contains(r.output, "0 distinct source knot(s)"));

  // csv shape
  r = run("sources 1/3 --max-crossing 9 --format csv");
  CHECK(contains(r.output, "source_p,source_q,source_crossing,target_p,target_q,target_crossing,n,eps,c"));
  CHECK(contains(r.output, "27,5,9,3,1,3,1,+++,0;-1"));

  // json lines: every line parses on its own
  r = run("sources 1/3 --max-crossing 9 --format json");
  std::size_t lines = 0, pos = 0;
  while (pos < r.output.size()) {
    std::size_t eol = r.output.find('\n', pos);
    if (eol == std::string::npos) break;
    auto line = nlohmann::json::parse(r.output.substr(pos, eol - pos));
    CHECK(line["command"] == "sources");
    pos = eol + 1;
    ++lines;
  }
  CHECK(lines == 4);

  // budget cap, from the flag and from the environment
  CHECK(run("sources 1/3 --max-crossing 40 --budget 1000").exit_code == 4);
  CHECK(run("sources 1/3 --max-crossing 40", "BRIDGECENSUS_BUDGET=1000 ").exit_code == 4);
  CHECK(run("sources 1/3 --max-crossing 9", "BRIDGECENSUS_BUDGET=1000 ").exit_code == 0);
}

TEST_CASE("targets") {
  RunResult r = run("targets 1/9");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "K(1/3)"));
  CHECK(contains(r.output, "1 distinct source knot(s)"));

  r = run("targets 2/7");
  CHECK(contains(r.output, "0 witness(es)"));
}

TEST_CASE("census") {
  RunResult r = run("census --max-crossing 10 --format csv");
  CHECK(r.exit_code == 0);
  // 4 witnesses at crossing 9 plus 8 at crossing 10, one header line
  std::size_t rows = 0;
  for (char ch : r.output)
    if (ch == '\n') ++rows;
  CHECK(rows == 13);
}

TEST_CASE("tables") {
  RunResult r = run("tables --which table1");
  CHECK(contains(r.output, "21,22,23 -> 14"));
  CHECK(contains(r.output, "30,31,32 -> 95"));

  r = run("tables --which tk --max 12");
  CHECK(contains(r.output, "TK(12) = 176"));

  r = run("tables --which genfun --target 1/3 --max-exp 25");
  CHECK(contains(r.output, "t^25: 6391"));

  r = run("tables --which ek --max 17");
  CHECK(contains(r.output, "EK(17) = 2"));

  CHECK(run("tables --which nonsense").exit_code == 2);
}

TEST_CASE("byte-identical reruns and big-integer serialization") {
  RunResult a = run("sources 1/3 --max-crossing 12 --format csv");
  RunResult b = run("sources 1/3 --max-crossing 12 --format csv");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  // TK(70) exceeds the 53-bit JSON-safe range and must arrive as a string
  RunResult r = run("tables --which tk --max 70 --format json");
  auto record = nlohmann::json::parse(r.output);
  const auto& rows = record["payload"]["rows"];
  bool saw_string = false;
  for (const auto& row : rows) {
    if (row["n"] == 70) {
      CHECK(row["tk"].is_string());
      CHECK(row["tk"] == "49191317532755449173");
      saw_string = true;
    } else if (row["n"] == 16) {
      CHECK(row["tk"] == 2752);
    }
  }
  CHECK(saw_string);
}
