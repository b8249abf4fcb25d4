#include <benchmark/benchmark.h>

#include <random>

#include <gpd/algebra.hpp>
#include <gpd/blend.hpp>
#include <gpd/standard.hpp>
#include <gpd/zs_product.hpp>

namespace {

gpd::GroupoidFunction random_function(const gpd::Groupoid& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  gpd::GroupoidFunction f(g);
  for (gpd::Elem x = 0; x < g.size(); ++x) {
    f.set(x, gpd::Scalar(dist(rng), dist(rng)));
  }
  return f;
}

void BM_Validate(benchmark::State& state) {
  gpd::Groupoid g = gpd::random_groupoid(1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gpd::validate(g).ok());
  }
}
BENCHMARK(BM_Validate)->Arg(10)->Arg(40)->Arg(100);

void BM_Convolve(benchmark::State& state) {
  gpd::Groupoid g = gpd::random_groupoid(2, static_cast<int>(state.range(0)));
  gpd::GroupoidFunction a = random_function(g, 3), b = random_function(g, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gpd::convolve(a, b));
  }
}
BENCHMARK(BM_Convolve)->Arg(10)->Arg(40)->Arg(100);

void BM_ReducedNorm(benchmark::State& state) {
  gpd::Groupoid g = gpd::random_groupoid(4, static_cast<int>(state.range(0)));
  gpd::GroupoidFunction a = random_function(g, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gpd::reduced_norm(a));
  }
}
BENCHMARK(BM_ReducedNorm)->Arg(10)->Arg(40)->Arg(100);

void BM_VerifyMatchedPair(benchmark::State& state) {
  gpd::MatchedPair mp = gpd::direct_product_pair(
      gpd::cyclic_group(static_cast<int>(state.range(0))),
      gpd::cyclic_group(static_cast<int>(state.range(0)) + 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gpd::verify_matched_pair(mp).ok());
  }
}
BENCHMARK(BM_VerifyMatchedPair)->Arg(3)->Arg(6)->Arg(10);

void BM_BuildZsProduct(benchmark::State& state) {
  gpd::MatchedPair mp = gpd::direct_product_pair(
      gpd::cyclic_group(static_cast<int>(state.range(0))),
      gpd::cyclic_group(static_cast<int>(state.range(0)) + 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gpd::build_zs_product(mp).product().size());
  }
}
BENCHMARK(BM_BuildZsProduct)->Arg(3)->Arg(6)->Arg(10);

void BM_BlendDensity(benchmark::State& state) {
  gpd::ZsGroupoid zs = gpd::build_zs_product(gpd::direct_product_pair(
      gpd::cyclic_group(static_cast<int>(state.range(0))),
      gpd::cyclic_group(static_cast<int>(state.range(0)) + 1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gpd::blend_density(zs).span_rank);
  }
}
BENCHMARK(BM_BlendDensity)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
