#include "gr1core/cli.hpp"

#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gr1core/errors.hpp"
#include "gr1core/parser.hpp"
#include "gr1core/punch.hpp"
#include "gr1core/report.hpp"
#include "gr1core/solver.hpp"

namespace gr1core {

namespace {

using Clock = std::chrono::steady_clock;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct GlobalOptions {
  std::string format = "text";
  bool no_memo = false;
  bool with_stats = false;
};

void emit(const Report& report, const GlobalOptions& g, std::ostream& out) {
  if (g.format == "json")
    out << to_json(report).dump(2) << "\n";
  else
    render_text(report, g.with_stats, out);
}

Gr1Problem load_problem(const std::string& path) {
  return reduce(parse_spec(read_file(path)));
}

int run_check(const std::string& path, const GlobalOptions& g,
              std::ostream& out) {
  const auto start = Clock::now();
  Gr1Problem problem = load_problem(path);
  bool realizable = is_realizable(problem, problem.assumption_universe,
                                  problem.guarantee_universe);
  AllCoresStats stats;
  stats.actual_checks = 1;
  stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  emit(make_report(problem, "check", realizable, {}, {}, true, stats), g, out);
  return realizable ? exit_ok : exit_unrealizable;
}

int run_core(const std::string& path, const std::string& alg,
             const GlobalOptions& g, std::ostream& out) {
  const auto start = Clock::now();
  Gr1Problem problem = load_problem(path);

  ElementSet core;
  AllCoresStats stats;
  if (alg == "quickcore") {
    QuickCoreOptions options;
    options.use_memo = !g.no_memo;
    CoreResult result = quickcore(problem, options);
    core = std::move(result.core);
    stats.actual_checks = result.stats.actual_checks;
    stats.memo_hits = result.stats.memo_hits;
  } else {
    auto ctx = std::make_shared<RealizabilityContext>();
    ctx->problem = &problem;
    ctx->assumption_ids = problem.assumption_universe;
    Criterion check = make_unrealizability_criterion(ctx);
    if (!g.no_memo) check = memoize(check);
    if (!check.check(problem.guarantee_universe))
      throw RealizableInputError(
          "specification is realizable; there is no unrealizable core");
    MinAlg min_alg = alg == "ddmin" ? MinAlg::ddmin
                     : alg == "quickxplain" ? MinAlg::quickxplain
                                            : MinAlg::linear;
    core = minimize(min_alg, problem.guarantee_universe, check);
    stats.actual_checks = check.stats().actual_checks;
    stats.memo_hits = check.stats().memo_hits;
  }
  stats.core_computations = 1;
  stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  emit(make_report(problem, alg, false, {core}, {}, true, stats), g, out);
  return exit_ok;
}

int run_all_cores(const std::string& path, const std::string& alg,
                  long timeout_secs, const GlobalOptions& g,
                  std::ostream& out) {
  Gr1Problem problem = load_problem(path);

  PunchOptions options;
  options.timeout = std::chrono::seconds(timeout_secs);

  AllCoresResult result;
  if (alg == "td") {
    auto ctx = std::make_shared<RealizabilityContext>();
    ctx->problem = &problem;
    ctx->assumption_ids = problem.assumption_universe;
    Criterion check = make_unrealizability_criterion(ctx);
    if (!g.no_memo) check = memoize(check);
    if (!check.check(problem.guarantee_universe))
      throw RealizableInputError(
          "specification is realizable; there are no unrealizable cores");
    result = td_all_cores(problem.guarantee_universe, check, options);
  } else if (alg == "punch-ud") {
    result = punch_ud(problem, options, !g.no_memo);
  } else {
    result = punch_qc(problem, options, !g.no_memo);
  }

  emit(make_report(problem, alg, false, result.cores, result.intersection,
                   result.complete, result.stats),
       g, out);
  return result.complete ? exit_ok : exit_timeout;
}

int run_oracle(const std::string& path, const GlobalOptions& g,
               std::ostream& out) {
  const auto start = Clock::now();
  Gr1Problem problem = load_problem(path);

  std::uint64_t checks = 0;
  auto raw_check = [&](const ElementSet& gars) {
    ++checks;
    return !is_realizable(problem, problem.assumption_universe, gars);
  };
  if (!raw_check(problem.guarantee_universe))
    throw RealizableInputError(
        "specification is realizable; there are no unrealizable cores");
  std::vector<ElementSet> cores =
      brute_force_all_cores(problem.guarantee_universe, raw_check);

  ElementSet intersection;
  if (!cores.empty()) {
    intersection = cores.front();
    for (const ElementSet& c : cores) intersection = intersection.intersect(c);
  }
  AllCoresStats stats;
  stats.actual_checks = checks;
  stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  emit(make_report(problem, "oracle", false, cores, intersection, true, stats),
       g, out);
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"GR(1) realizability and unrealizable-core analysis"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("--no-memo", global.no_memo,
               "Disable memoization of realizability checks");
  app.add_flag("--stats", global.with_stats,
               "Include check statistics in text output");

  std::string check_path;
  CLI::App* check = app.add_subcommand(
      "check", "Report whether the specification is realizable");
  check->add_option("spec", check_path, "Specification file (.spc)")
      ->required();

  std::string core_path;
  std::string core_alg = "quickcore";
  CLI::App* core =
      app.add_subcommand("core", "Compute one unrealizable core");
  core->add_option("--alg", core_alg, "Core algorithm")
      ->check(CLI::IsMember({"quickcore", "ddmin", "quickxplain", "linear"}))
      ->capture_default_str();
  core->add_option("spec", core_path, "Specification file (.spc)")->required();

  std::string all_path;
  std::string all_alg = "punch-qc";
  long timeout_secs = 600;
  CLI::App* all =
      app.add_subcommand("all-cores", "Enumerate all unrealizable cores");
  all->add_option("--alg", all_alg, "Enumeration algorithm")
      ->check(CLI::IsMember({"punch-qc", "punch-ud", "td"}))
      ->capture_default_str();
  all->add_option("--timeout-secs", timeout_secs, "Cooperative timeout")
      ->capture_default_str();
  all->add_option("spec", all_path, "Specification file (.spc)")->required();

  std::string oracle_path;
  CLI::App* oracle = app.add_subcommand(
      "oracle", "Brute-force all cores (small guarantee universes only)");
  oracle->add_option("spec", oracle_path, "Specification file (.spc)")
      ->required();

  std::vector<const char*> argv;
  argv.push_back("gr1core");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (check->parsed()) return run_check(check_path, global, out);
    if (core->parsed()) return run_core(core_path, core_alg, global, out);
    if (all->parsed())
      return run_all_cores(all_path, all_alg, timeout_secs, global, out);
    return run_oracle(oracle_path, global, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse_error;
  } catch (const RealizableInputError& e) {
    err << "error: " << e.what() << "\n";
    return exit_realizable_input;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse_error;
  }
}

}  // namespace gr1core
