#include <benchmark/benchmark.h>

#include "incseq/ensembles.hpp"
#include "incseq/group_integrals.hpp"
#include "incseq/invariants.hpp"
#include "incseq/opuc.hpp"
#include "incseq/rsk.hpp"
#include "incseq/symfunc.hpp"

using namespace incseq;

static void BM_f_count_U(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(f_count_table(Symmetry::U, n, n));
}
BENCHMARK(BM_f_count_U)->DenseRange(4, 8, 2);

static void BM_f_from_series_U(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(f_from_series(Symmetry::U, n, 3));
}
BENCHMARK(BM_f_from_series_U)->DenseRange(4, 8, 2);

static WeightedMultiset grid(int side) {
  WeightedMultiset M;
  for (int i = 1; i <= side; ++i)
    for (int j = 1; j <= side; ++j) M.add(i, j, 1 + (i * 7 + j * 3) % 3);
  return M;
}

static void BM_knuth_correspondence(benchmark::State& st) {
  const WeightedMultiset M = grid(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(knuth_correspondence(M, {}, {}));
}
BENCHMARK(BM_knuth_correspondence)->RangeMultiplier(2)->Range(4, 32);

static void BM_lis_general(benchmark::State& st) {
  const WeightedMultiset M = grid(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(lis_general(M, {1, 3}, {2}));
}
BENCHMARK(BM_lis_general)->RangeMultiplier(2)->Range(4, 32);

static void BM_straighten_reverse(benchmark::State& st) {
  const int n = static_cast<int>(st.range(0));
  Perm rev(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rev[static_cast<size_t>(i)] = n - i;
  const GroupAlgebraElement e = GroupAlgebraElement::of(rev);
  for (auto _ : st) benchmark::DoNotOptimize(straighten_U(e, 2));
}
BENCHMARK(BM_straighten_reverse)->DenseRange(3, 6);

static void BM_basis_U(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(basis_U(static_cast<int>(st.range(0)), 2));
}
BENCHMARK(BM_basis_U)->DenseRange(3, 5);

static void BM_opuc_bessel(benchmark::State& st) {
  const int order = static_cast<int>(st.range(0)), L = 6;
  const MomentSequence c = bessel_moments(order, auto_window(L, order));
  for (auto _ : st) benchmark::DoNotOptimize(opuc_build(c, L));
}
BENCHMARK(BM_opuc_bessel)->DenseRange(8, 16, 4);

static void BM_schur_identity(benchmark::State& st) {
  IdentityContext ctx;
  ctx.D = static_cast<int>(st.range(0));
  const std::string tag = identity_tags().front();
  for (auto _ : st) benchmark::DoNotOptimize(verify_identity(tag, 2, ctx));
}
BENCHMARK(BM_schur_identity)->DenseRange(4, 8, 2);

BENCHMARK_MAIN();
