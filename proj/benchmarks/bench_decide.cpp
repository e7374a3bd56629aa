#include <benchmark/benchmark.h>

#include "rvl/decide.hpp"
#include "rvl/syntax.hpp"

namespace {

// A goal with m meet nodes (2^m sign branches): entailment of
// 0 <= min(P1, min(P2, ...)) from 0 <= Pi, plus a few mixing rows.
struct Instance {
  rvl::Theory theory;
  rvl::Inequality goal;
};

Instance make_instance(int meets) {
  using rvl::Formula;
  Instance inst;
  Formula chain = Formula::letter("P0");
  for (int i = 1; i <= meets; ++i) {
    Formula p = Formula::letter("P" + std::to_string(i));
    chain = Formula::meet(std::move(chain), Formula::add(p, Formula::letter("P0")));
  }
  for (int i = 0; i <= meets; ++i) {
    inst.theory.push_back(
        rvl::Inequality{Formula::zero(), Formula::letter("P" + std::to_string(i))});
  }
  inst.goal = rvl::Inequality{Formula::zero(), std::move(chain)};
  return inst;
}

void BM_decide_serial(benchmark::State& state) {
  Instance inst = make_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    rvl::Verdict v = rvl::decide(inst.theory, inst.goal, rvl::Mode::basic, {false});
    benchmark::DoNotOptimize(v);
    if (v.kind != rvl::Verdict::Kind::entails) state.SkipWithError("unexpected verdict");
  }
}

void BM_decide_parallel(benchmark::State& state) {
  Instance inst = make_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    rvl::Verdict v = rvl::decide(inst.theory, inst.goal, rvl::Mode::basic, {true});
    benchmark::DoNotOptimize(v);
    if (v.kind != rvl::Verdict::Kind::entails) state.SkipWithError("unexpected verdict");
  }
}

}  // namespace

BENCHMARK(BM_decide_serial)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_decide_parallel)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
