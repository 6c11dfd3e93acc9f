// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <random>

#include "tlj/manifold.hpp"

using namespace tlj;

namespace {

TLElement dense_element(int n, const SkeinContext& ctx, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(1, 5);
  TLElement x(n, n);
  for (const auto& m : enumerate_matchings(n, n)) x.add(m, ctx.one() * Scalar(coeff(rng)));
  return x;
}

template <bool Parallel>
void BM_compose(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  auto ctx = SkeinContext::at_root(20, 1);
  TLElement x = dense_element(n, *ctx, 1), y = dense_element(n, *ctx, 2);
  for (auto _ : st) benchmark::DoNotOptimize(Parallel ? compose(x, y, *ctx) : compose_serial(x, y, *ctx));
}

template <bool Parallel>
void BM_gram_exponents(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(Parallel ? gram_exponents(n) : gram_exponents_serial(n));
}

template <bool Parallel>
void BM_omega_bracket(benchmark::State& st) {
  auto md = build_modular_data(static_cast<int>(st.range(0)), RootClass::Primitive4r);
  auto s = make_surgery(BraidWord(3, {1, 1, 2, 2}), {0, 1, -1});
  for (auto _ : st) {
    clear_bracket_cache();
    benchmark::DoNotOptimize(Parallel ? omega_bracket(s.link, md) : omega_bracket_serial(s.link, md));
  }
}

}  // namespace

BENCHMARK(BM_compose<true>)->Name("compose/parallel")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_compose<false>)->Name("compose/serial")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gram_exponents<true>)->Name("gram_exponents/parallel")->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_gram_exponents<false>)->Name("gram_exponents/serial")->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_omega_bracket<true>)->Name("omega_bracket/parallel")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_omega_bracket<false>)->Name("omega_bracket/serial")->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
