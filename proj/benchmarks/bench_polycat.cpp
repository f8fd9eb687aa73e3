#include <benchmark/benchmark.h>

#include <random>

#include "polycat/axioms.hpp"
#include "polycat/corpus.hpp"
#include "polycat/elements.hpp"
#include "polycat/fibration.hpp"
#include "polycat/free.hpp"
#include "polycat/tensor_norms.hpp"

using namespace polycat;

namespace {

void BM_AxiomsMaterializedTerminal(benchmark::State& state) {
  auto t = materialize(*terminal(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(*t).passed());
}
BENCHMARK(BM_AxiomsMaterializedTerminal)->DenseRange(2, 3);

void BM_FreeLaws(benchmark::State& state) {
  trees::PolySignature sig({"A", "B"}, {{"f", {"A", "B"}, {"B"}}, {"g", {"B"}, {"A", "A"}}});
  for (auto _ : state) benchmark::DoNotOptimize(trees::check_free_laws(sig, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_FreeLaws)->DenseRange(3, 6);

void BM_BirepBifibCrosscheck(benchmark::State& state) {
  auto p = from_monoid(cyclic_group(2), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(birep_bifib_crosscheck(p).agree());
}
BENCHMARK(BM_BirepBifibCrosscheck)->DenseRange(2, 4);

void BM_ProjectiveNorm(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  auto u = random_tensor({d, d}, rng);
  std::vector<PolytopeNorm> ns{PolytopeNorm::l1(d), PolytopeNorm::linf(d)};
  for (auto _ : state) benchmark::DoNotOptimize(projective_norm(u, ns));
}
BENCHMARK(BM_ProjectiveNorm)->DenseRange(2, 4);

void BM_InjectiveNorm(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  auto u = random_tensor({d, d}, rng);
  std::vector<PolytopeNorm> ns{PolytopeNorm::l1(d), PolytopeNorm::linf(d)};
  for (auto _ : state) benchmark::DoNotOptimize(injective_norm(u, ns));
}
BENCHMARK(BM_InjectiveNorm)->DenseRange(2, 4);

void BM_PolarVertices(benchmark::State& state) {
  auto v = PolytopeNorm::linf(static_cast<std::size_t>(state.range(0))).vertices();
  for (auto _ : state) benchmark::DoNotOptimize(polar_vertices(v));
}
BENCHMARK(BM_PolarVertices)->DenseRange(2, 4);

void BM_ElementsRoundtrip(benchmark::State& state) {
  auto c = random_graded_case(static_cast<std::uint64_t>(state.range(0)), false);
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip_check(c.functor).passed());
}
BENCHMARK(BM_ElementsRoundtrip)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
