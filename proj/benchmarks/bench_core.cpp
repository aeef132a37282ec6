#include <benchmark/benchmark.h>

#include "gcf/cf.hpp"
#include "gcf/limits.hpp"
#include "gcf/scanner.hpp"
#include "gcf/special.hpp"

namespace {

gcf::cf_spec spec_of(const char* a, const char* b) {
  return gcf::cf_spec{gcf::poly_seq::parse(a), gcf::poly_seq::parse(b)};
}

void BM_pq_convergents_linear(benchmark::State& state) {
  gcf::cf_spec spec = spec_of("n+3", "-n");
  const long M = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcf::pq_convergents(spec, M));
  }
}
BENCHMARK(BM_pq_convergents_linear)->Arg(256)->Arg(1024)->Arg(4096);

void BM_pq_convergents_zeta3(benchmark::State& state) {
  gcf::cf_spec spec = spec_of("(n-1)^3+n^3", "-n^6");
  const long M = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcf::pq_convergents(spec, M));
  }
}
BENCHMARK(BM_pq_convergents_zeta3)->Arg(256)->Arg(1024);

void BM_eval_exp(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcf::eval_exp(gcf::rational(1), digits));
  }
}
BENCHMARK(BM_eval_exp)->Arg(50)->Arg(500)->Arg(5000);

void BM_eval_pi(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcf::eval_pi(digits));
  }
}
BENCHMARK(BM_eval_pi)->Arg(50)->Arg(500);

void BM_eval_zeta(benchmark::State& state) {
  const int digits = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcf::eval_zeta(3, digits));
  }
}
BENCHMARK(BM_eval_zeta)->Arg(30)->Arg(100);

void BM_estimate_limit(benchmark::State& state) {
  gcf::cf_spec spec = spec_of("(n-1)^2+n^2", "-n^4");
  for (auto _ : state) {
    benchmark::DoNotOptimize(gcf::estimate_limit(spec, 12, state.range(0)));
  }
}
BENCHMARK(BM_estimate_limit)->Arg(1024)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
