#include <benchmark/benchmark.h>

#include "zpd/nullcheck.hpp"
#include "zpd/polyspec.hpp"

using namespace zpd;

namespace {
const GfpField gf(32003);
}

static void BM_span_insert_729(benchmark::State& state) {
  SplitMix64 rng(1);
  std::vector<std::vector<GfpField::Elem>> vecs;
  for (int k = 0; k < 64; ++k) {
    std::vector<GfpField::Elem> v(729);
    for (auto& x : v) x = random_elem(gf, rng);
    vecs.push_back(std::move(v));
  }
  for (auto _ : state) {
    SpanBasis<GfpField> b(gf, 729);
    for (const auto& v : vecs) b.insert(v);
    benchmark::DoNotOptimize(b.rank());
  }
}
BENCHMARK(BM_span_insert_729);

static void BM_evaluate_gc_d3(benchmark::State& state) {
  auto gc = polys::generalized_commutator(gf);
  SplitMix64 rng(2);
  MatTuple<GfpField> t;
  for (int k = 0; k < 3; ++k) t.push_back(random_mat(gf, 3, rng));
  for (auto _ : state) benchmark::DoNotOptimize(gc.evaluate(t).is_zero());
}
BENCHMARK(BM_evaluate_gc_d3);

static void BM_certify_gc_d2(benchmark::State& state) {
  auto gc = polys::generalized_commutator(gf);
  ZeroGenConfig cfg;
  cfg.seed = 42;
  for (auto _ : state) {
    auto v = certify(gc, 2, cfg);
    benchmark::DoNotOptimize(v.rank_zero_span);
  }
}
BENCHMARK(BM_certify_gc_d2);

static void BM_cayley_distance_s7(benchmark::State& state) {
  auto s7 = all_perms(7);
  SplitMix64 rng(3);
  for (auto _ : state) {
    const Perm& p = s7[rng.below(s7.size())];
    const Perm& q = s7[rng.below(s7.size())];
    benchmark::DoNotOptimize(cayley_distance(p, q));
  }
}
BENCHMARK(BM_cayley_distance_s7);

static void BM_build_witness_5cycle(benchmark::State& state) {
  Perm q = Perm::from_one_line_1based({5, 1, 2, 3, 4});
  for (auto _ : state) {
    auto w = build_witness(gf, q, gf.from_long(3), 4);
    benchmark::DoNotOptimize(w.size());
  }
}
BENCHMARK(BM_build_witness_5cycle);

BENCHMARK_MAIN();
