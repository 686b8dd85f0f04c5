#include <benchmark/benchmark.h>

#include "reeblab/abelian.hpp"
#include "reeblab/closure.hpp"
#include "reeblab/handle_sim.hpp"
#include "reeblab/omega.hpp"
#include "reeblab/presentation_builders.hpp"
#include "reeblab/smith.hpp"
#include "reeblab/word_parse.hpp"

namespace {

using namespace reeblab;

void BM_OmegaSearch(benchmark::State& state) {
  const auto p = circle_bundle(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(omega_search(p));
}
BENCHMARK(BM_OmegaSearch)->DenseRange(1, 3);

void BM_MemberBounded(benchmark::State& state) {
  const Alphabet ab({"a", "b"});
  const std::vector<Word> rel{parse_word("[a,b]", ab)};
  const Word target = parse_word("[a,b]^2 a [a,b] a^-1", ab);
  for (auto _ : state) benchmark::DoNotOptimize(member_bounded({rel, target, 2, static_cast<std::size_t>(state.range(0))}));
}
BENCHMARK(BM_MemberBounded)->DenseRange(2, 4);

void BM_Simulate(benchmark::State& state) {
  const auto seq = circle_bundle_seq(static_cast<int>(state.range(0)), -1);
  for (auto _ : state) benchmark::DoNotOptimize(run(seq));
}
BENCHMARK(BM_Simulate)->RangeMultiplier(4)->Range(1, 64);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto m = exponent_matrix(circle_bundle(static_cast<int>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(1, 32);

}  // namespace
BENCHMARK_MAIN();
