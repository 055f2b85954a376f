#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>

#include "hsoc/report.hpp"

#include "helpers.hpp"

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(HSOC_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int rc = pclose(p);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

std::string fx(const std::string& name) { return test::fixture(name); }

}  // namespace

TEST_CASE("analyze reports the [15,5]_9 numbers", "[cli]") {
  auto r = run_cli("--format json analyze " + fx("f9_15_5.code"));
  REQUIRE(r.status == 0);
  auto j = hsoc::json::parse(r.out);
  CHECK(j["command"] == "analyze");
  CHECK(j["n"] == 15);
  CHECK(j["k"] == 5);
  CHECK(j["field"]["q"] == 3);
  CHECK(j["dual_distance"] == 5);
  CHECK(j["puncture_dim"] == 2);
  CHECK(j["hf_dim"] == 12);
  CHECK(j["conditions_imposed"] == 13);
  CHECK(j["dim_identity_ok"] == true);
  CHECK(j["classification"] == "TRUNCATES");
}

TEST_CASE("structured output is byte-stable across runs", "[cli]") {
  std::string args = "--format json --seed 7 puncture " + fx("f9_15_5.code");
  auto a = run_cli(args);
  auto b = run_cli(args);
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  auto j = hsoc::json::parse(a.out);
  CHECK(j["dim"] == 2);
  REQUIRE(j["weights"].size() == 4);  // weights 0, 9, 12, 15
}

TEST_CASE("worker count does not change structured output", "[cli]") {
  for (std::string cmd : {"puncture " + fx("f9_15_5.code"),
                          "zeros " + fx("f4_13_7.code")}) {
    auto one = run_cli("--format json --workers 1 " + cmd);
    auto four = run_cli("--format json --workers 4 " + cmd);
    REQUIRE(one.status == 0);
    REQUIRE(four.status == 0);
    CHECK(one.out == four.out);
  }
}

TEST_CASE("puncture on a dim-0 instance exits 0 with an empty table", "[cli]") {
  auto r = run_cli("--format json puncture " + fx("f4_13_7.code"));
  REQUIRE(r.status == 0);
  auto j = hsoc::json::parse(r.out);
  CHECK(j["dim"] == 0);
  REQUIRE(j["weights"].size() == 1);
  CHECK(j["weights"][0]["weight"] == 0);
}

TEST_CASE("quantum --weight picks one row, --all surveys", "[cli]") {
  auto r = run_cli("--format json quantum --weight 9 " + fx("f9_15_5.code"));
  REQUIRE(r.status == 0);
  auto j = hsoc::json::parse(r.out);
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["n"] == 9);
  CHECK(j["rows"][0]["k"] == 1);
  CHECK(j["rows"][0]["d"] == 5);
  CHECK(j["rows"][0]["q"] == 3);
  CHECK(j["rows"][0]["singleton_gap"] == 0);

  auto all = run_cli("--format json quantum --all " + fx("f9_15_5.code"));
  REQUIRE(all.status == 0);
  CHECK(hsoc::json::parse(all.out)["rows"].size() == 3);

  auto neither = run_cli("quantum " + fx("f9_15_5.code"));
  CHECK(neither.status == 2);
  auto missing = run_cli("quantum --weight 10 " + fx("f9_15_5.code"));
  CHECK(missing.status == 1);
}

TEST_CASE("extend against a code that already truncates", "[cli]") {
  auto r = run_cli("--format json extend " + fx("f9_15_5.code"));
  REQUIRE(r.status == 0);
  auto j = hsoc::json::parse(r.out);
  CHECK(j["applicable"] == false);
}

TEST_CASE("zeros command reports dim HF and the point list", "[cli]") {
  auto r = run_cli("--format json zeros " + fx("f4_13_7.code"));
  REQUIRE(r.status == 0);
  auto j = hsoc::json::parse(r.out);
  CHECK(j["hf_dim"] == 36);
  CHECK(j["count"] == 14);
  CHECK(j["contains_columns"] == true);
}

TEST_CASE("analyze degrades gracefully on non-projective codes", "[cli]") {
  std::string tmp = std::filesystem::temp_directory_path() / "hsoc_nonproj.code";
  {
    std::ofstream f(tmp);
    f << "code n=3 k=2\nfield p=2 h=1\n1 1 0\n0 0 1\n";
  }
  auto r = run_cli("--format json analyze " + tmp);
  REQUIRE(r.status == 0);
  auto j = hsoc::json::parse(r.out);
  CHECK(j["projective"] == false);
  CHECK(j["classification"].is_null());
  CHECK(j["classification_status"] == "not_projective");
  CHECK(j["hf_dim"].is_null());
  CHECK(j["puncture_dim"].is_number());
}

TEST_CASE("analyze turns an oversized zero enumeration into a cap notice", "[cli]") {
  // classifying the [43,36] cyclic code itself would need PG(35,4)
  auto r = run_cli("--format json analyze " + fx("f4_cyclic_n43.cyclic"));
  REQUIRE(r.status == 0);
  auto j = hsoc::json::parse(r.out);
  CHECK(j["n"] == 43);
  CHECK(j["k"] == 36);
  CHECK(j["classification"].is_null());
  CHECK(j["classification_status"] == "cap_exceeded");
  CHECK(j["dim_identity_ok"] == true);
}

TEST_CASE("exit codes: parse 2, cap 3", "[cli]") {
  auto missing = run_cli("analyze /nonexistent.code");
  CHECK(missing.status == 2);

  std::string tmp = std::filesystem::temp_directory_path() / "hsoc_bad.code";
  {
    std::ofstream f(tmp);
    f << "code n=2 k=1\nfield p=2 h=1\n1 qq\n";
  }
  auto bad = run_cli("analyze " + tmp);
  CHECK(bad.status == 2);
  CHECK(bad.out.find("qq") != std::string::npos);
  CHECK(bad.out.find("line 3") != std::string::npos);

  auto capped = run_cli("--cap-points 3 zeros " + fx("f4_13_7.code"));
  CHECK(capped.status == 3);

  auto capped_words = run_cli("--cap-words 2 puncture " + fx("f9_15_5.code"));
  CHECK(capped_words.status == 3);
}

TEST_CASE("cyclic generation feeds analyze", "[cli]") {
  std::string out = std::filesystem::temp_directory_path() / "hsoc_c43.code";
  auto gen = run_cli("cyclic --in " + fx("f4_cyclic_n43.cyclic") + " --dual -o " + out);
  REQUIRE(gen.status == 0);
  auto r = run_cli("--format json analyze " + out);
  REQUIRE(r.status == 0);
  auto j = hsoc::json::parse(r.out);
  CHECK(j["n"] == 43);
  CHECK(j["k"] == 7);
  CHECK(j["rank_m"] == 29);
  CHECK(j["puncture_dim"] == 14);
  CHECK(j["classification"] == "TRUNCATES");

  // inline flags instead of a file
  std::string out2 = std::filesystem::temp_directory_path() / "hsoc_par.code";
  auto gen2 = run_cli("cyclic --n 5 --g \"x-1\" --field \"p=2 h=1\" -o " + out2);
  REQUIRE(gen2.status == 0);
  auto j2 = hsoc::json::parse(run_cli("--format json analyze " + out2).out);
  CHECK(j2["n"] == 5);
  CHECK(j2["k"] == 4);

  // truncation range validation
  auto badrange = run_cli("cyclic --in " + fx("f4_cyclic_n43.cyclic") +
                          " --dual --truncate 40..50 -o " + out2);
  CHECK(badrange.status == 2);
}

TEST_CASE("truncated cyclic generation reproduces the [60,7]_9 code", "[cli]") {
  std::string out = std::filesystem::temp_directory_path() / "hsoc_c60.code";
  auto gen = run_cli("cyclic --in " + fx("f9_cyclic_n73.cyclic") +
                     " --dual --truncate 61..73 -o " + out);
  REQUIRE(gen.status == 0);
  auto j = hsoc::json::parse(run_cli("--format json analyze " + out).out);
  CHECK(j["n"] == 60);
  CHECK(j["k"] == 7);
  CHECK(j["puncture_dim"] == 11);
  CHECK(j["classification"] == "LARGE_N");
}
