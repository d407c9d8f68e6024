#include "qsuper/classical.hpp"
#include "qsuper/hopf.hpp"
#include "qsuper/lusztig.hpp"
#include "qsuper/random.hpp"
#include "qsuper/rmatrix.hpp"

#include <benchmark/benchmark.h>

using namespace qsuper;

namespace {

void BM_ScalarMul(benchmark::State& state) {
  AlgebraPtr a = Algebra::get(2, 1, static_cast<int>(state.range(0)), 1);
  Sampler s(1);
  CycScalar x = s.scalar(*a) + s.scalar(*a), y = s.scalar(*a) - s.scalar(*a);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_ScalarMul)->Arg(3)->Arg(5)->Arg(7);

void BM_ScalarInverse(benchmark::State& state) {
  AlgebraPtr a = Algebra::get(2, 1, static_cast<int>(state.range(0)), 1);
  CycScalar x = a->q(1) - a->q(-1) + a->scalar(3);
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_ScalarInverse)->Arg(3)->Arg(5)->Arg(7);

void BM_EnumerateGroupoid(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_groupoid(static_cast<int>(state.range(0)), 1));
}
BENCHMARK(BM_EnumerateGroupoid)->Arg(2)->Arg(3);

void BM_ReduceWord(benchmark::State& state) {
  AlgebraPtr a = Algebra::get(2, 1, 3, static_cast<int>(state.range(0)));
  Sampler s(2);
  std::vector<std::vector<int>> words;
  for (int i = 0; i < 64; ++i) words.push_back(s.word(*a, 8));
  std::size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(reduce_word(*a, words[i++ % words.size()], a->scalar(1), DescentStrategy::Leftmost));
}
BENCHMARK(BM_ReduceWord)->Arg(1)->Arg(3);

void BM_Multiply(benchmark::State& state) {
  AlgebraPtr a = Algebra::get(2, 1, static_cast<int>(state.range(0)), 1);
  Sampler s(3);
  Element x = s.element(*a, 5, 5), y = s.element(*a, 5, 5);
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_Multiply)->Arg(3)->Arg(5);

void BM_VerifyPbw(benchmark::State& state) {
  AlgebraPtr a = Algebra::get(2, 1, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(verify_pbw(*a));
}
BENCHMARK(BM_VerifyPbw)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Coproduct(benchmark::State& state) {
  AlgebraPtr a = Algebra::get(2, 1, 3, 1);
  HopfStructure h = HopfStructure::standard(a);
  Sampler s(4);
  Element x = s.element(*a, 5, 6);
  for (auto _ : state) benchmark::DoNotOptimize(h.coproduct(x));
}
BENCHMARK(BM_Coproduct);

void BM_TMapApply(benchmark::State& state) {
  AlgebraMorphism t = t_map(2, 1, 3, 2, 1, TVariant::T);
  Sampler s(5);
  Element x = s.element(*t.source(), 5, 6);
  for (auto _ : state) benchmark::DoNotOptimize(t.apply(x));
}
BENCHMARK(BM_TMapApply);

void BM_PathTwist(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(groupoid_path_twist(2, 1, 3, GroupoidWord{1, {2, 1}}));
}
BENCHMARK(BM_PathTwist)->Unit(benchmark::kMillisecond);

void BM_BuildK(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_k(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildK)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BuildRbar1(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_rbar1(3));
}
BENCHMARK(BM_BuildRbar1)->Unit(benchmark::kMillisecond)->Iterations(1);

void BM_ClassicalSuperbialgebra(benchmark::State& state) {
  classical::Sl21 s;
  for (auto _ : state) benchmark::DoNotOptimize(s.verify_superbialgebra(1));
}
BENCHMARK(BM_ClassicalSuperbialgebra)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
