// Serial reference vs OpenMP kernels. Run with OMP_NUM_THREADS set to compare
// scaling; each pair works on identical inputs.

#include <benchmark/benchmark.h>

#include <random>

#include "conseq/cell_dist.hpp"
#include "conseq/freq_seq.hpp"
#include "conseq/kernels/axiom_kernels.hpp"
#include "conseq/kernels/scan_kernels.hpp"

using namespace conseq;
using namespace conseq::kernels;

namespace {

// Closure under a few random implication rules, so every axiom holds and the
// check has to visit the whole table.
std::vector<Mask> closure_table(unsigned n) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<Mask> dist(0, (Mask{1} << n) - 1);
  std::vector<std::pair<Mask, Mask>> rules(6);
  for (auto& r : rules) r = {dist(rng), dist(rng)};
  std::vector<Mask> t(std::size_t{1} << n);
  for (Mask y = 0; y < t.size(); ++y) {
    Mask z = y;
    for (bool changed = true; changed;) {
      changed = false;
      for (auto [pre, post] : rules) {
        if ((pre & ~z) == 0 && (post & ~z) != 0) {
          z |= post;
          changed = true;
        }
      }
    }
    t[y] = z;
  }
  return t;
}

template <auto Fn>
void BM_Axiom(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto axiom = static_cast<Axiom>(state.range(1));
  auto table = closure_table(n);
  SubsetOrder order(n);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(table, n, axiom, order));
}

template <auto Fn>
void BM_Census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Fn(2));
}

template <auto Fn>
void BM_Deviation(benchmark::State& state) {
  auto seq = build_ap_prefix(Probability(3, 7), static_cast<std::size_t>(state.range(0)));
  Rational p(3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(seq.terms(), p));
}

template <auto Fn>
void BM_Discrepancy(benchmark::State& state) {
  auto probs = ProbabilityVector::parse("1/6,1/3,1/2");
  auto cells = build_cell_sequences(probs, static_cast<std::size_t>(state.range(0)));
  std::vector<std::span<const std::int64_t>> spans;
  for (const auto& s : cells.sequences) spans.push_back(s.terms());
  auto values = probs.values();
  for (auto _ : state) benchmark::DoNotOptimize(Fn(spans, values));
}

}  // namespace

#define AXIOM_ARGS ArgsProduct({{8, 10, 12}, {0, 1, 2}})
BENCHMARK(BM_Axiom<first_violation_serial>)->AXIOM_ARGS;
BENCHMARK(BM_Axiom<first_violation_parallel>)->AXIOM_ARGS;
BENCHMARK(BM_Census<monotone_census_serial>);
BENCHMARK(BM_Census<monotone_census_parallel>);
BENCHMARK(BM_Deviation<deviation_scan_serial>)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_Deviation<deviation_scan_parallel>)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_Discrepancy<discrepancy_scan_serial>)->Arg(10000)->Arg(100000);
BENCHMARK(BM_Discrepancy<discrepancy_scan_parallel>)->Arg(10000)->Arg(100000);

BENCHMARK_MAIN();
