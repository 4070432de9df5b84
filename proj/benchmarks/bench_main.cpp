#include <benchmark/benchmark.h>

#include "tri3/catalog.hpp"
#include "tri3/constructions.hpp"
#include "tri3/derivation.hpp"
#include "tri3/hom.hpp"
#include "tri3/report.hpp"

using namespace tri3;

namespace {

TriSystem blocks(const char* a, const char* b, const char* c) {
  GenParams p;
  p.a_kind = a;
  p.b_kind = b;
  p.c_kind = c;
  p.zero_pairing = false;
  return generate_instance(1, "upper-tri-blocks", p);
}

TriSystem sized(int which) {
  switch (which) {
    case 0: return scalar_system(1);
    case 1: return blocks("M2", "Q", "Q2");
    case 2: return blocks("M2", "Q2", "M2");
    default: return blocks("M2", "M2", "M2");
  }
}

void BM_DerivationSpace(benchmark::State& state) {
  const TriAlgebra t = build_triangular(sized(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(derivation_space(t.algebra));
  state.counters["dim_T"] = static_cast<double>(t.dim());
}
BENCHMARK(BM_DerivationSpace)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CornerRoundTrip(benchmark::State& state) {
  const TriAlgebra t = build_triangular(sized(static_cast<int>(state.range(0))));
  const MapSpace der = derivation_space(t.algebra);
  for (auto _ : state)
    for (std::size_t i = 0; i < der.dim(); ++i) benchmark::DoNotOptimize(reconstruct(t, extract_corners(t, der.basis_map(i))));
}
BENCHMARK(BM_CornerRoundTrip)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CompatibleTriples(benchmark::State& state) {
  const TriSystem sys = sized(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(compatible_triples(sys));
    benchmark::DoNotOptimize(joint_rosenblum(sys));
  }
}
BENCHMARK(BM_CompatibleTriples)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_VerifyTheorems(benchmark::State& state) {
  const TriSystem sys = sized(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorems(sys, "bench"));
}
BENCHMARK(BM_VerifyTheorems)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RatMatrix m(n, n);
  // Hilbert-like matrix: dense, nonsingular, with growing denominators.
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(1, static_cast<long>(r + c + 1));
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->RangeMultiplier(2)->Range(8, 32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
