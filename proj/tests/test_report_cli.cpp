#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gr1core/cli.hpp"
#include "gr1core/report.hpp"
#include "support/fixtures.hpp"

using namespace gr1core;

namespace {

std::string temp_spec(const std::string& contents) {
  static int counter = 0;
  auto path = std::filesystem::temp_directory_path() /
              ("gr1core_cli_test_" + std::to_string(++counter) + ".spc");
  std::ofstream(path) << contents;
  return path.string();
}

std::string spec_path(const std::string& name) {
  return std::string(GR1CORE_SPEC_DIR) + "/" + name;
}

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::set<std::vector<int>> cores_from_json(const nlohmann::json& j) {
  std::set<std::vector<int>> cores;
  for (const auto& core : j.at("cores")) {
    std::vector<int> lines;
    for (const auto& e : core) lines.push_back(e.at("source_line").get<int>());
    std::sort(lines.begin(), lines.end());
    cores.insert(lines);
  }
  return cores;
}

std::set<std::vector<int>> cores_from_text(const std::string& text) {
  std::set<std::vector<int>> cores;
  std::regex line_re(R"(core \d+: lines \{([0-9, ]*)\})");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), line_re);
       it != std::sregex_iterator(); ++it) {
    std::vector<int> lines;
    std::stringstream ss((*it)[1].str());
    std::string tok;
    while (std::getline(ss, tok, ',')) lines.push_back(std::stoi(tok));
    std::sort(lines.begin(), lines.end());
    cores.insert(lines);
  }
  return cores;
}

}  // namespace

TEST_CASE("check prints the verdict and uses exit codes 0/1") {
  CliRun unreal = run({"check", spec_path("lift.spc")});
  CHECK(unreal.exit_code == exit_unrealizable);
  CHECK(unreal.out == "UNREALIZABLE\n");

  std::string tmp = temp_spec("env boolean p; sys boolean q; gar ini q;\n");
  CliRun real = run({"check", tmp});
  CHECK(real.exit_code == exit_ok);
  CHECK(real.out == "REALIZABLE\n");
  std::remove(tmp.c_str());
}

TEST_CASE("core --format json reports traceable elements") {
  CliRun r = run({"--format", "json", "core", "--alg", "quickcore",
                  spec_path("monitor.spc")});
  CHECK(r.exit_code == exit_ok);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(validate_report_json(j).empty());
  CHECK(j["algorithm"] == "quickcore");
  CHECK(j["realizable"] == false);
  REQUIRE(j["cores"].size() == 1);

  std::set<int> lines;
  std::set<std::string> origins;
  for (const auto& e : j["cores"][0]) {
    lines.insert(e["source_line"].get<int>());
    origins.insert(e["origin"].get<std::string>());
    CHECK(e.contains("id"));
    CHECK(e.contains("kind"));
    CHECK(e.contains("text"));
  }
  CHECK(lines == std::set<int>{4, 8, 9});
  CHECK(origins ==
        std::set<std::string>{"monitor-internal", "declared"});
}

TEST_CASE("all-cores reports six lift cores with intersection line 27") {
  CliRun r = run({"--format", "json", "all-cores", "--alg", "punch-qc",
                  spec_path("lift.spc")});
  CHECK(r.exit_code == exit_ok);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(validate_report_json(j).empty());
  CHECK(j["complete"] == true);
  CHECK(j["cores"].size() == 6);
  REQUIRE(j["intersection"].size() == 1);
  CHECK(j["intersection"][0]["source_line"] == 27);
  CHECK(j["stats"]["core_computations"] == 6);
  CHECK(j["stats"]["actual_checks"].get<int>() > 0);
}

TEST_CASE("text and JSON report identical core sets") {
  for (const char* alg : {"punch-qc", "punch-ud", "td"}) {
    CAPTURE(alg);
    CliRun text =
        run({"all-cores", "--alg", alg, spec_path("lift.spc")});
    CliRun json = run({"--format", "json", "all-cores", "--alg", alg,
                       spec_path("lift.spc")});
    CHECK(text.exit_code == exit_ok);
    CHECK(json.exit_code == exit_ok);
    CHECK(cores_from_text(text.out) ==
          cores_from_json(nlohmann::json::parse(json.out)));
  }
}

TEST_CASE("oracle agrees with punch on the lift fixture") {
  CliRun oracle = run({"--format", "json", "oracle", spec_path("lift.spc")});
  CliRun punch = run({"--format", "json", "all-cores", spec_path("lift.spc")});
  CHECK(oracle.exit_code == exit_ok);
  nlohmann::json jo = nlohmann::json::parse(oracle.out);
  nlohmann::json jp = nlohmann::json::parse(punch.out);
  CHECK(validate_report_json(jo).empty());
  CHECK(cores_from_json(jo) == cores_from_json(jp));
}

TEST_CASE("parse errors exit with code 2 and a diagnostic") {
  std::string tmp = temp_spec("env boolean p;\nasm ;\n");
  CliRun r = run({"check", tmp});
  CHECK(r.exit_code == exit_parse_error);
  CHECK(r.err.find("2:") != std::string::npos);
  std::remove(tmp.c_str());
}

TEST_CASE("core commands reject realizable input with exit code 3") {
  std::string tmp = temp_spec("env boolean p; sys boolean q; gar ini q;\n");
  for (std::vector<std::string> args :
       {std::vector<std::string>{"core", tmp},
        std::vector<std::string>{"all-cores", tmp},
        std::vector<std::string>{"oracle", tmp}}) {
    CliRun r = run(args);
    CHECK(r.exit_code == exit_realizable_input);
    CHECK(!r.err.empty());
  }
  std::remove(tmp.c_str());
}

TEST_CASE("a zero timeout yields exit code 4 and a partial report") {
  CliRun r = run({"--format", "json", "all-cores", "--timeout-secs", "0",
                  spec_path("lift.spc")});
  CHECK(r.exit_code == exit_timeout);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(validate_report_json(j).empty());
  CHECK(j["complete"] == false);
}

TEST_CASE("no-memo runs report identical cores") {
  CliRun with = run({"--format", "json", "all-cores", spec_path("lift.spc")});
  CliRun without = run({"--format", "json", "--no-memo", "all-cores",
                        spec_path("lift.spc")});
  CHECK(cores_from_json(nlohmann::json::parse(with.out)) ==
        cores_from_json(nlohmann::json::parse(without.out)));
}

TEST_CASE("stats flag adds a stats line to text output") {
  CliRun r = run({"--stats", "core", "--alg", "ddmin", spec_path("lift.spc")});
  CHECK(r.exit_code == exit_ok);
  CHECK(r.out.find("stats:") != std::string::npos);
  CHECK(r.out.find("actual checks") != std::string::npos);
}
