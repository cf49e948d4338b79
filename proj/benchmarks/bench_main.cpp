#include <benchmark/benchmark.h>

#include "qtor/cluster.hpp"
#include "qtor/dbar.hpp"
#include "qtor/dtilde.hpp"

using namespace qtor;

namespace {

ARFrame frame_for(int code) {
  switch (code) {
    case 0: return ARFrame::monotonic(Family::A, 5);
    case 1: return ARFrame::monotonic(Family::D, 5);
    case 2: return ARFrame::monotonic(Family::E, 6);
    case 3: return ARFrame::monotonic(Family::E, 7);
    default: return ARFrame::monotonic(Family::E, 8);
  }
}

// Fresh table each iteration: measures the recurrence, not the cache.
void BM_CtildeTable(benchmark::State& st) {
  auto d = frame_for(static_cast<int>(st.range(0))).datum();
  const int m = static_cast<int>(st.range(1));
  for (auto _ : st) {
    CtildeTable t(d);
    benchmark::DoNotOptimize(t(1, d.rank(), m));
  }
  st.SetLabel(d.name());
}
BENCHMARK(BM_CtildeTable)->Args({0, 40})->Args({2, 40})->Args({4, 120});

void BM_DtildeY(benchmark::State& st) {
  auto f = frame_for(static_cast<int>(st.range(0)));
  CtildeTable t(f.datum());
  for (auto _ : st)
    for (long s = 1; s <= 2L * f.N(); ++s) {
      auto x = f.phi_inv(s);
      benchmark::DoNotOptimize(dtilde_Y(f, t, x.i, x.p));
    }
  st.SetLabel(f.datum().name());
}
BENCHMARK(BM_DtildeY)->DenseRange(0, 2);

void BM_InitialKR(benchmark::State& st) {
  auto f = frame_for(static_cast<int>(st.range(0)));
  CtildeTable t(f.datum());
  for (auto _ : st) {
    DtildeEngine e(f, t);
    for (long s = 1; s <= 2L * f.N(); ++s) benchmark::DoNotOptimize(e.initial(s));
  }
  st.SetLabel(f.datum().name());
}
BENCHMARK(BM_InitialKR)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Properties(benchmark::State& st) {
  auto f = frame_for(static_cast<int>(st.range(0)));
  CtildeTable t(f.datum());
  for (auto _ : st) benchmark::DoNotOptimize(verify_properties(f, t, 2L * f.N()).ok());
  st.SetLabel(f.datum().name());
}
BENCHMARK(BM_Properties)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_MutationSweep(benchmark::State& st) {
  auto f = frame_for(static_cast<int>(st.range(0)));
  CtildeTable t(f.datum());
  auto seed = initial_seed(f, t, 2 * f.N(), true);
  std::vector<int> seq;
  for (int v = 1; v <= 2 * f.N(); ++v)
    if (!seed.quiver.is_frozen(v)) seq.push_back(v);
  for (auto _ : st) benchmark::DoNotOptimize(mutate_sequence(seed, seq).values.size());
  st.SetLabel(f.datum().name());
}
BENCHMARK(BM_MutationSweep)->DenseRange(0, 1)->Unit(benchmark::kMillisecond);

void BM_CuspidalCoverage(benchmark::State& st) {
  auto f = frame_for(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(cuspidal_coverage(f).applicable);
  st.SetLabel(f.datum().name());
}
BENCHMARK(BM_CuspidalCoverage)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
