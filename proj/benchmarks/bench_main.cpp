#include <benchmark/benchmark.h>

#include "masseylab/cochain.hpp"
#include "masseylab/embedding.hpp"
#include "masseylab/finite_group.hpp"
#include "masseylab/fixtures.hpp"
#include "masseylab/unitriangular.hpp"

using namespace masseylab;

namespace {

MasseyQuery query(const char* group, std::uint32_t p, std::uint32_t n, std::size_t element) {
  auto g = fixture_group(group);
  Cohomology h(g, p);
  MasseyQuery q{g, p, {}};
  for (std::uint32_t i = 0; i < n; ++i) q.classes.push_back(h.h1_elements().at(element));
  return q;
}

void BM_HomsIntoU4(benchmark::State& state) {
  auto v4 = fixture_group("V4");
  const auto& u4 = materialized_quotient(4, 2).table();
  for (auto _ : state) benchmark::DoNotOptimize(all_homs(v4, u4).size());
}
BENCHMARK(BM_HomsIntoU4)->Unit(benchmark::kMillisecond);

void BM_Cohomology(benchmark::State& state) {
  const char* names[] = {"V4", "Q8", "D4", "Z2xZ4"};
  auto g = fixture_group(names[state.range(0)]);
  for (auto _ : state) {
    Cohomology h(g, 2);
    benchmark::DoNotOptimize(h.h2_dim());
  }
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_Cohomology)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_LayeredDwyer(benchmark::State& state) {
  auto q = query("Z4", 2, std::uint32_t(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(solve_dwyer(q).verdict);
  state.SetLabel("Z4, n = " + std::to_string(state.range(0)));
}
BENCHMARK(BM_LayeredDwyer)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
