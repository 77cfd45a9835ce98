// Serial reference against the OpenMP path for the instance-parallel kernels.
// Arg 0 runs serial, arg 1 parallel.

#include <benchmark/benchmark.h>

#include <random>

#include "fcat/corpus.hpp"
#include "fcat/exec.hpp"
#include "fcat/isbell.hpp"
#include "fcat/prof.hpp"
#include "fcat/relmonad.hpp"

using namespace fcat;

namespace {

Exec mode(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_ComposeCoend(benchmark::State& s) {
  set_default_exec(mode(s));
  std::mt19937_64 rng(3);
  const Cat A = corpus::diamond();
  const Cat B = corpus::span();
  const Profunctor P = corpus::random_profunctor(A, B, rng, 3);
  const Profunctor Q = corpus::random_profunctor(B, A, rng, 3);
  for (auto _ : s) benchmark::DoNotOptimize(compose_coend(Q, P));
}

void BM_KleisliCompose(benchmark::State& s) {
  set_default_exec(mode(s));
  std::mt19937_64 rng(5);
  const Cat X = corpus::diamond();
  const Cat Y = corpus::chain(3);
  const KleisliCell f = kleisli_cell(corpus::random_profunctor(Y, X, rng, 3));
  const KleisliCell g = kleisli_cell(corpus::random_profunctor(X, Y, rng, 3));
  for (auto _ : s) benchmark::DoNotOptimize(kleisli_compose(g, f));
}

void BM_UnitLaws(benchmark::State& s) {
  set_default_exec(mode(s));
  const PresheafMonad M = sample_monad(corpus::span(), 1, 2);
  for (auto _ : s) benchmark::DoNotOptimize(check_unit_laws(M));
}

void BM_IsbellAdjunction(benchmark::State& s) {
  set_default_exec(mode(s));
  const Cat A = corpus::parallel_pair();
  const IsbellSamples samples = isbell_samples(A, 1, 2);
  for (auto _ : s) benchmark::DoNotOptimize(isbell_adjunction_check(A, samples));
}

}  // namespace

BENCHMARK(BM_ComposeCoend)->Arg(0)->Arg(1);
BENCHMARK(BM_KleisliCompose)->Arg(0)->Arg(1);
BENCHMARK(BM_UnitLaws)->Arg(0)->Arg(1);
BENCHMARK(BM_IsbellAdjunction)->Arg(0)->Arg(1);

BENCHMARK_MAIN();
