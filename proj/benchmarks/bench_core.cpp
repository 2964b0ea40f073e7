#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "tsurg/intlat.hpp"
#include "tsurg/invariants.hpp"
#include "tsurg/surgery.hpp"
#include "tsurg/threemflds.hpp"

using namespace tsurg;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int bound) {
  std::uniform_int_distribution<int> entry(-bound, bound);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(42);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::vector<IntMatrix> inputs;
  for (int i = 0; i < 32; ++i) inputs.push_back(random_matrix(rng, n, 99));
  std::size_t k = 0;
  for (auto _ : state) {
    auto snf = smith_normal_form(inputs[k++ % inputs.size()]);
    benchmark::DoNotOptimize(snf.D);
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(2)->Arg(4)->Arg(6)->Arg(8);

void BM_ExtGcd(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> v(-1000000, 1000000);
  for (auto _ : state) {
    ExtGcd e = ext_gcd(v(rng), v(rng));
    benchmark::DoNotOptimize(e.g);
  }
}
BENCHMARK(BM_ExtGcd);

void BM_GluingMatrix(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> v(-50, 50);
  for (auto _ : state) {
    SurgeryDescriptor d{v(rng), v(rng), v(rng)};
    if (!is_primitive(d)) continue;
    benchmark::DoNotOptimize(gluing_matrix(d));
  }
}
BENCHMARK(BM_GluingMatrix);

void BM_DehnH1(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::uniform_int_distribution<int> lk(-3, 3);
  std::uniform_int_distribution<std::int64_t> coeff(1, 9);
  DehnSurgeryLink l;
  l.components = n;
  l.linking = IntMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      int v = lk(rng);
      l.linking(i, j) = v;
      l.linking(j, i) = v;
    }
  for (std::size_t i = 0; i < n; ++i) l.coefficients.push_back({coeff(rng), 1});
  for (auto _ : state) benchmark::DoNotOptimize(dehn_h1(l));
}
BENCHMARK(BM_DehnH1)->Arg(2)->Arg(4)->Arg(6);

void BM_Abelianization(benchmark::State& state) {
  GroupPresentation g;
  g.generators = {"a", "b", "c", "d"};
  g.relators = {{1, 2, -1, -2}, {3, 4, 3, -4, -3, -4}, {1, 3, 1, 3}};
  for (auto _ : state) benchmark::DoNotOptimize(abelianization(g));
}
BENCHMARK(BM_Abelianization);

}  // namespace

BENCHMARK_MAIN();
