#include <benchmark/benchmark.h>

#include <fstream>
#include <sstream>

#include "gr1core/parser.hpp"
#include "gr1core/punch.hpp"
#include "gr1core/quickcore.hpp"
#include "gr1core/solver.hpp"

namespace {

using namespace gr1core;

Gr1Problem load(const std::string& name) {
  std::ifstream in(std::string(GR1CORE_SPEC_DIR) + "/" + name,
                   std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return reduce(parse_spec(buf.str()));
}

Criterion unrealizability(const Gr1Problem& p) {
  auto ctx = std::make_shared<RealizabilityContext>();
  ctx->problem = &p;
  ctx->assumption_ids = p.assumption_universe;
  return memoize(make_unrealizability_criterion(ctx));
}

void BM_LiftRealizability(benchmark::State& state) {
  Gr1Problem p = load("lift.spc");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        is_realizable(p, p.assumption_universe, p.guarantee_universe));
  }
}
BENCHMARK(BM_LiftRealizability);

void BM_LiftQuickCore(benchmark::State& state) {
  Gr1Problem p = load("lift.spc");
  for (auto _ : state) benchmark::DoNotOptimize(quickcore(p).core);
}
BENCHMARK(BM_LiftQuickCore);

void BM_LiftDDMin(benchmark::State& state) {
  Gr1Problem p = load("lift.spc");
  for (auto _ : state) {
    Criterion check = unrealizability(p);
    benchmark::DoNotOptimize(ddmin(p.guarantee_universe, check));
  }
}
BENCHMARK(BM_LiftDDMin);

void BM_LiftQuickXplain(benchmark::State& state) {
  Gr1Problem p = load("lift.spc");
  for (auto _ : state) {
    Criterion check = unrealizability(p);
    benchmark::DoNotOptimize(quickxplain(p.guarantee_universe, check));
  }
}
BENCHMARK(BM_LiftQuickXplain);

void BM_LiftPunchQC(benchmark::State& state) {
  Gr1Problem p = load("lift.spc");
  for (auto _ : state) benchmark::DoNotOptimize(punch_qc(p).cores);
}
BENCHMARK(BM_LiftPunchQC);

void BM_LiftPunchUD(benchmark::State& state) {
  Gr1Problem p = load("lift.spc");
  for (auto _ : state) benchmark::DoNotOptimize(punch_ud(p).cores);
}
BENCHMARK(BM_LiftPunchUD);

void BM_LiftTD(benchmark::State& state) {
  Gr1Problem p = load("lift.spc");
  for (auto _ : state) {
    Criterion check = unrealizability(p);
    benchmark::DoNotOptimize(td_all_cores(p.guarantee_universe, check).cores);
  }
}
BENCHMARK(BM_LiftTD);

void BM_MonitorQuickCore(benchmark::State& state) {
  Gr1Problem p = load("monitor.spc");
  for (auto _ : state) benchmark::DoNotOptimize(quickcore(p).core);
}
BENCHMARK(BM_MonitorQuickCore);

}  // namespace

BENCHMARK_MAIN();
