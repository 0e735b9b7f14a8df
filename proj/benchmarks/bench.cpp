#include <benchmark/benchmark.h>

#include <random>

#include "vbraid/builtins.hpp"
#include "vbraid/homology.hpp"
#include "vbraid/snf.hpp"

using namespace vbraid;

namespace {

RingMatrix random_integer_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  RingMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, entry(rng));
  return m;
}

VirtualBraidWord random_word(int n, int len, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> idx(1, n - 1), kind(0, 2);
  std::vector<Generator> g;
  for (int k = 0; k < len; ++k) {
    const int c = kind(rng);
    g.push_back({c == 0 ? GenKind::Sigma : c == 1 ? GenKind::SigmaInv : GenKind::Zeta, idx(rng)});
  }
  return VirtualBraidWord(n, g);
}

void BM_SmithNormalForm(benchmark::State& state) {
  const auto m = random_integer_matrix(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16)->Arg(32);

void BM_BurauWord(benchmark::State& state) {
  const auto obj = burau_object();
  const auto w = random_word(4, static_cast<int>(state.range(0)), 5);
  for (auto _ : state) benchmark::DoNotOptimize(rho_word(obj, w));
}
BENCHMARK(BM_BurauWord)->Arg(8)->Arg(32);

void BM_FreeShelfEquality(benchmark::State& state) {
  const auto a = parse_term("((x*x)*x)*x");
  const auto b = parse_term("((x*x)*x)*(x*x)");
  for (auto _ : state) benchmark::DoNotOptimize(equal_in_free_shelf(a, b));
}
BENCHMARK(BM_FreeShelfEquality);

void BM_ClassifySweep(benchmark::State& state) {
  FiniteRackTable t;
  t.size = 3;
  t.op.assign(3, std::vector<int>(3, 0));
  for (auto _ : state) {
    int shelves = 0;
    for (int code = 0; code < 19683; ++code) {
      int x = code;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b, x /= 3) t.op[a][b] = x % 3;
      shelves += classify(t).cls >= RackClass::Shelf;
    }
    benchmark::DoNotOptimize(shelves);
  }
}
BENCHMARK(BM_ClassifySweep)->Unit(benchmark::kMillisecond);

void BM_RackHomology(benchmark::State& state) {
  const auto g = from_finite_shelf(dihedral_quandle(3));
  const int top = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const auto cx = gsd_faces(g, all_ones_covector(3), top);
    benchmark::DoNotOptimize(homology_of(cx, 1, -1));
  }
}
BENCHMARK(BM_RackHomology)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
