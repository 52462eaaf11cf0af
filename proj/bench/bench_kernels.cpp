// Parallel kernels against their serial references on the same inputs.
#include <benchmark/benchmark.h>

#include "hkv/fourier.hpp"
#include "hkv/lcg.hpp"
#include "hkv/qform.hpp"

using namespace hkv;

namespace {

HKRingPtr ring_of_rank(std::size_t r) {
  return r == 23 ? HKRing::make(k3hilb_lattice(k3_lattice()), 1) : HKRing::make(identity_space(r), 1);
}

RationalVector random_vector(Lcg64& rng, std::size_t n) {
  RationalVector v(n);
  for (auto& x : v) x = ratio(rng.range(-4, 4), rng.range(1, 3));
  return v;
}

void BM_Multiply22(benchmark::State& state, bool reference) {
  const auto ring = ring_of_rank(static_cast<std::size_t>(state.range(0)));
  Lcg64 rng(7);
  const auto a = random_vector(rng, ring->dim(2)), b = random_vector(rng, ring->dim(4));
  for (auto _ : state) {
    auto out = reference ? ring->multiply_reference(2, a, 4, b) : ring->multiply(2, a, 4, b);
    benchmark::DoNotOptimize(out);
  }
}

void BM_CorrCup(benchmark::State& state, bool reference) {
  const auto kit = make_fourier_kit(ring_of_rank(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    auto out = reference ? corr_cup_reference(kit.B, kit.B) : corr_cup(kit.B, kit.B);
    benchmark::DoNotOptimize(out);
  }
}

void BM_Triple(benchmark::State& state, bool reference) {
  const auto kit = make_fourier_kit(ring_of_rank(static_cast<std::size_t>(state.range(0))));
  const TripleRule rule = [](int t, int p, int q) { return t + p + q == 4; };
  for (auto _ : state) {
    auto out = reference ? triple_vanishing_check_reference(kit.powers, rule) : triple_vanishing_check(kit.powers, rule);
    benchmark::DoNotOptimize(out);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_Multiply22, parallel, false)->Arg(6)->Arg(23)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Multiply22, reference, true)->Arg(6)->Arg(23)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CorrCup, parallel, false)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_CorrCup, reference, true)->Arg(6)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Triple, parallel, false)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Triple, reference, true)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
