// Serial reference vs OpenMP scans. Arg 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include "nakaoka/gring.hpp"
#include "nakaoka/ideals.hpp"
#include "nakaoka/kernels.hpp"

namespace {

using namespace nakaoka;

kernels::Policy policy_of(const benchmark::State& state) {
  return state.range(0) == 0 ? kernels::Policy::serial : kernels::Policy::parallel;
}

ElementSet multiples(const FiniteRing& r, Elem d) {
  ElementSet s(r.order());
  for (Elem x = 0; x < r.order(); ++x)
    if (x % d == 0) s.insert(x);
  return s;
}

// (2) is G-prime in Z/1024 under the trivial C4 action: the scan never stops early.
void BM_GprimeViolation(benchmark::State& state) {
  const auto s = trivial_gring(make_lattice(FiniteGroup::cyclic(4)), FiniteRing::zmod(1024));
  const auto ideal = multiples(s.ring, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::find_gprime_violation(s.ring, s.action, ideal, policy_of(state)));
}
BENCHMARK(BM_GprimeViolation)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

FunctorPtr fp_zmod(std::size_t group_order, std::size_t n) {
  return fixed_point_functor(trivial_gring(make_lattice(FiniteGroup::cyclic(group_order)), FiniteRing::zmod(n))).functor;
}

// Principal-pair primality of the prime ideal (2) everywhere in FP(Z/256) over C6.
void BM_PrimeTest(benchmark::State& state) {
  const auto f = fp_zmod(6, 256);
  std::vector<ElementSet> levels;
  for (const auto& r : f->levels) levels.push_back(multiples(r, 2));
  const auto p = make_ideal(f, levels);
  for (auto _ : state) benchmark::DoNotOptimize(is_prime(p, policy_of(state)));
}
BENCHMARK(BM_PrimeTest)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumerateIdeals(benchmark::State& state) {
  const auto f = fp_zmod(6, 72);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_ideals(f, kDefaultSearchBound, IdealKind::tambara, policy_of(state)));
}
BENCHMARK(BM_EnumerateIdeals)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
