#include <benchmark/benchmark.h>

#include "ellroot/lfunction.hpp"
#include "ellroot/parity.hpp"

using namespace ellroot;

namespace {

WeierstrassModel sample_curve(std::uint32_t p) {
  FieldPtr F = make_field(p, 1);
  // y^2 = x^3 + 2t^2 x + t^3 + t + 1
  return WeierstrassModel(Poly(F), Poly(F), Poly(F), Poly(F, {0, 0, 2}), Poly(F, {1, 1, 0, 1}));
}

}  // namespace

static void FieldMul(benchmark::State& state) {
  FieldPtr F = make_field(5, static_cast<int>(state.range(0)));
  Code a = F->generator(), acc = F->one();
  for (auto _ : state) {
    acc = F->mul(acc, a);
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(FieldMul)->Arg(1)->Arg(4)->Arg(8);

static void FieldInverse(benchmark::State& state) {
  FieldPtr F = make_field(7, static_cast<int>(state.range(0)));
  Code a = F->generator();
  for (auto _ : state) {
    a = F->inv(F->add(a, F->one()));
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(FieldInverse)->Arg(2)->Arg(6);

static void TraceOfFrobenius(benchmark::State& state) {
  FieldPtr F = make_field(5, static_cast<int>(state.range(0)));
  PointCounter pc(F);
  Code A = F->generator(), B = F->one();
  for (auto _ : state) {
    benchmark::DoNotOptimize(pc.trace(A, B));
    B = F->add(B, F->one());
  }
  state.SetItemsProcessed(state.iterations() * F->q());
}
BENCHMARK(TraceOfFrobenius)->Arg(2)->Arg(4)->Arg(6);

static void GaussSum(benchmark::State& state) {
  FieldPtr F = make_residue_field(13, static_cast<int>(state.range(0)));
  std::uint64_t j = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauss_sum(F, j));
    j = j % (F->q() - 2) + 1;
  }
}
BENCHMARK(GaussSum)->Arg(1)->Arg(2)->Arg(4);

static void EpsilonStability(benchmark::State& state) {
  FieldPtr F = make_residue_field(13, 1);
  const wd::LocalFieldTag tag = wd::local_field(F);
  const wd::WDRep r = wd::WDRep::character(wd::base_character(F, 5, -1.0));
  for (auto _ : state) benchmark::DoNotOptimize(wd::verify_stability(r, tag, static_cast<int>(state.range(0))));
}
BENCHMARK(EpsilonStability)->Arg(2)->Arg(6);

static void ReductionTable(benchmark::State& state) {
  const WeierstrassModel E = sample_curve(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reduction_table(E));
}
BENCHMARK(ReductionTable)->Arg(5)->Arg(7);

static void LPolynomialOfCurve(benchmark::State& state) {
  const WeierstrassModel E = sample_curve(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(l_polynomial(E));
}
BENCHMARK(LPolynomialOfCurve)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

static void GlobalRootNumber(benchmark::State& state) {
  const auto table = reduction_table(sample_curve(7));
  for (auto _ : state) benchmark::DoNotOptimize(global_root_number(table));
}
BENCHMARK(GlobalRootNumber);
BENCHMARK_MAIN();
