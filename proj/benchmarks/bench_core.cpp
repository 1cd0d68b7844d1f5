#include <benchmark/benchmark.h>

#include "knotclasp/bounds.hpp"
#include "knotclasp/braid.hpp"
#include "knotclasp/semigroup.hpp"
#include "knotclasp/seifert.hpp"
#include "knotclasp/torus_signature.hpp"

using namespace knotclasp;

namespace {

std::string torus_word(long p, long q) {
  std::string cycle, w;
  for (long g = 0; g + 1 < p; ++g) cycle += static_cast<char>('a' + g);
  for (long k = 0; k < q; ++k) w += cycle;
  return w;
}

void BM_SignatureStepFunction(benchmark::State& state) {
  const long n = state.range(0);
  const auto [p, q, p2, q2] = family_I_pair(n);
  for (auto _ : state) benchmark::DoNotOptimize(signature_step_function(p, q));
  state.SetLabel("T(" + std::to_string(p) + "," + std::to_string(q) + ")");
  (void)p2;
  (void)q2;
}
BENCHMARK(BM_SignatureStepFunction)->Arg(1)->Arg(5)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_FamilyBounds(benchmark::State& state) {
  const auto [p, q, p2, q2] = family_I_pair(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theorem11_report(p, q, p2, q2, 10));
}
BENCHMARK(BM_FamilyBounds)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_HBSignatureAt(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hb_signature_at(13, 40, Rational(7, 41)));
}
BENCHMARK(BM_HBSignatureAt);

void BM_UpsilonFromSemigroup(benchmark::State& state) {
  const long i = state.range(0);
  const auto s = cable_semigroup({2, 3, 2, 2 * i + 1});
  for (auto _ : state) benchmark::DoNotOptimize(upsilon_from_semigroup(s, i + 2));
}
BENCHMARK(BM_UpsilonFromSemigroup)->Arg(2)->Arg(20)->Arg(200);

void BM_TorusUpsilon(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(torus_upsilon(7, state.range(0)));
}
BENCHMARK(BM_TorusUpsilon)->Arg(9)->Arg(50);

void BM_NormalForm(benchmark::State& state) {
  const auto w = parse_braid(torus_word(4, state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(w));
}
BENCHMARK(BM_NormalForm)->Arg(5)->Arg(20)->Arg(80);

void BM_BraidsEqualTorusWords(benchmark::State& state) {
  const auto a = parse_braid("abcabcabcabcabc", 4), b = parse_braid("abcabccbabcbcbc", 4);
  for (auto _ : state) benchmark::DoNotOptimize(braids_equal(a, b));
}
BENCHMARK(BM_BraidsEqualTorusWords);

void BM_SeifertSignature(benchmark::State& state) {
  const long q = state.range(0);
  const auto m = seifert_matrix_from_braid(parse_braid(torus_word(3, q), 3));
  for (auto _ : state) benchmark::DoNotOptimize(tl_signature_nullity(m, Rational(5, 16)));
}
BENCHMARK(BM_SeifertSignature)->Arg(7)->Arg(20);

void BM_AlexanderFromSeifert(benchmark::State& state) {
  const auto m = seifert_matrix_from_braid(parse_braid(torus_word(4, state.range(0)), 4));
  for (auto _ : state) benchmark::DoNotOptimize(alexander_polynomial(m));
}
BENCHMARK(BM_AlexanderFromSeifert)->Arg(5)->Arg(11);

}  // namespace

BENCHMARK_MAIN();
