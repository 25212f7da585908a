#include <benchmark/benchmark.h>

#include <gammaspace/cocartesian.hpp>
#include <gammaspace/gamma_checks.hpp>
#include <gammaspace/gamma_op.hpp>
#include <gammaspace/gamma_space.hpp>
#include <gammaspace/homotopy.hpp>
#include <gammaspace/simpset_ops.hpp>
#include <gammaspace/suite.hpp>

namespace {

using namespace gs;

Budget large_budget() { return Budget{50'000'000, 0}; }

// Every morphism between levels <= range(0).
void BM_FactorizeAll(benchmark::State& state) {
  const int top = static_cast<int>(state.range(0));
  std::vector<GammaMorphism> all;
  for (int n = 0; n <= top; ++n)
    for (int m = 0; m <= top; ++m)
      for (auto& f : enumerate_homs(n, m)) all.push_back(std::move(f));
  for (auto _ : state)
    for (const auto& f : all) benchmark::DoNotOptimize(factor_inert_active(f));
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * all.size()));
}
BENCHMARK(BM_FactorizeAll)->Arg(3)->Arg(4);

// Level n of (Γ1 ⊗ Δ[1]) * (Γ1 + Γ2).
void BM_DayEvaluate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PresentedGammaSpace x = tensor(1, standard_simplex(1, 2));
  const PresentedGammaSpace y = coproduct(representable(1, 2), representable(2, 2));
  const PresentedGammaSpace d = day_convolve(x, y);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(d, n));
}
BENCHMARK(BM_DayEvaluate)->DenseRange(2, 5);

// Coend over generating sets against the same pair.
void BM_CoendOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PresentedGammaSpace x = tensor(1, standard_simplex(1, 2));
  const PresentedGammaSpace y = coproduct(representable(1, 2), representable(2, 2));
  const TabulatedGammaSpace tx = tabulate(x, 1), ty = tabulate(y, 2);
  for (auto _ : state) benchmark::DoNotOptimize(coend_oracle(tx, 1, ty, 2, n));
}
BENCHMARK(BM_CoendOracle)->DenseRange(2, 4);

// Isomorphism test between two presentations of the same exponential.
void BM_IsoCheck(benchmark::State& state) {
  Budget b = large_budget();
  const SimpSet a = exponential(nerve(cyclic_group(3), 3), nerve(ordinal_category(static_cast<int>(state.range(0))), 3), b).set;
  const SimpSet c = nerve(functor_category(ordinal_category(static_cast<int>(state.range(0))), cyclic_group(3), b).cat, 3);
  for (auto _ : state) {
    Budget budget = large_budget();
    benchmark::DoNotOptimize(iso_check(a, c, budget));
  }
}
BENCHMARK(BM_IsoCheck)->Arg(1)->Arg(2);

void BM_MappingSpace(benchmark::State& state) {
  const TabulatedGammaSpace y = group_nerve_gamma_space(2, 6, 2);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Budget budget = large_budget();
    benchmark::DoNotOptimize(mapping_space(representable(n, 2), y, budget));
  }
}
BENCHMARK(BM_MappingSpace)->DenseRange(1, 4);

void BM_SegalSweep(benchmark::State& state) {
  const TabulatedGammaSpace x = group_nerve_gamma_space(2, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    Budget budget = large_budget();
    benchmark::DoNotOptimize(segal_sweep(x, x.level_bound(), SegalTier::iso, budget));
  }
}
BENCHMARK(BM_SegalSweep)->Arg(3)->Arg(4);

void BM_RelativeNerveOverGammaOp(benchmark::State& state) {
  const int level = static_cast<int>(state.range(0));
  const RelativeNerveInput in = gamma_diagram(monoid_gamma_space(2, level, 1), level);
  for (auto _ : state) {
    Budget budget = large_budget();
    benchmark::DoNotOptimize(relative_nerve(in, 1, budget));
  }
}
BENCHMARK(BM_RelativeNerveOverGammaOp)->DenseRange(2, 4);

void BM_CocartesianEdges(benchmark::State& state) {
  for (const auto& d : suite::diagram_corpus()) {
    if (d.name != "[2] -> ([1], [1], I)") continue;
    Budget b = large_budget();
    const RelativeNerve rn = relative_nerve(d.input, 3, b);
    for (auto _ : state) {
      Budget budget = large_budget();
      benchmark::DoNotOptimize(cocartesian_edges(rn.proj, 3, budget));
    }
  }
}
BENCHMARK(BM_CocartesianEdges);

void BM_HomotopyMappingSpace(benchmark::State& state) {
  const SimpSet x = nerve(product_category(ordinal_category(1), walking_iso()), 2);
  for (auto _ : state) {
    Budget budget = large_budget();
    benchmark::DoNotOptimize(h_map_space(standard_simplex(1, 2), x, budget));
  }
}
BENCHMARK(BM_HomotopyMappingSpace);

}  // namespace
BENCHMARK_MAIN();
