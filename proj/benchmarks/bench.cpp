#include <benchmark/benchmark.h>

#include "whk/cl1.hpp"
#include "whk/constructors.hpp"
#include "whk/sympoly.hpp"

using namespace whk;

namespace {

void BM_PcMultiply(benchmark::State& state) {
  FiniteGroup g = almost_extra_special(3, 2);  // order 729, pc backend
  SplitMix64 rng(1);
  std::vector<Elem> elems;
  for (int i = 0; i < 512; ++i) elems.push_back(static_cast<Elem>(rng.below(g.order())));
  std::size_t i = 0;
  for (auto _ : state) {
    Elem r = g.mul(elems[i & 511], elems[(i + 1) & 511]);
    benchmark::DoNotOptimize(r);
    ++i;
  }
}
BENCHMARK(BM_PcMultiply);

void BM_TableMultiply(benchmark::State& state) {
  FiniteGroup big = central_product_identify_centers(make_M(3), make_M(3));
  SplitMix64 rng(2);
  std::vector<Elem> elems;
  for (int i = 0; i < 512; ++i) elems.push_back(static_cast<Elem>(rng.below(big.order())));
  std::size_t i = 0;
  for (auto _ : state) {
    Elem r = big.mul(elems[i & 511], elems[(i + 1) & 511]);
    benchmark::DoNotOptimize(r);
    ++i;
  }
}
BENCHMARK(BM_TableMultiply);

void BM_SubgroupClosure(benchmark::State& state) {
  FiniteGroup g = extra_special(3, 2, 1);
  std::vector<Elem> gens{g.generators()[0], g.generators()[2]};
  for (auto _ : state) {
    auto cl = g.closure_elems(gens);
    benchmark::DoNotOptimize(cl);
  }
}
BENCHMARK(BM_SubgroupClosure);

void BM_UVector(benchmark::State& state) {
  FiniteGroup g = almost_extra_special(3, 1);
  GeneticBasis basis = genetic_basis(g);
  std::vector<CyclicClass> classes = cyclic_subgroup_classes(g);
  const CyclicClass& cls = classes.back();
  Elem c = cls.cent.elems[1];
  for (auto _ : state) {
    RelationVector u = u_vector(g, basis, cls.rep, c);
    benchmark::DoNotOptimize(u);
  }
}
BENCHMARK(BM_UVector);

void BM_SmithQuotient(benchmark::State& state) {
  // a relation matrix of the size the order-3^6 run produces
  const std::size_t k = 123;
  std::vector<std::int64_t> moduli(k, 3);
  moduli[0] = 1;
  moduli[k - 1] = 9;
  SplitMix64 rng(3);
  std::vector<std::vector<std::int64_t>> rows;
  for (int r = 0; r < 374; ++r) {
    std::vector<std::int64_t> row(k, 0);
    for (std::size_t i = 1; i < k; ++i)
      row[i] = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(moduli[i])));
    rows.push_back(std::move(row));
  }
  for (auto _ : state) {
    AbelianInvariants inv = smith_quotient(3, moduli, rows);
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(BM_SmithQuotient);

void BM_Cl1ExtraSpecial27(benchmark::State& state) {
  for (auto _ : state) {
    AbelianInvariants inv = cl1_structure(make_M(3));
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(BM_Cl1ExtraSpecial27);

void BM_Cl1Order243(benchmark::State& state) {
  for (auto _ : state) {
    AbelianInvariants inv = cl1_structure(extra_special(3, 2, 1));
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(BM_Cl1Order243);

void BM_SpanRankAllPairs(benchmark::State& state) {
  for (auto _ : state) {
    int r = span_rank_all_pairs(3, 4);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_SpanRankAllPairs);

}  // namespace

BENCHMARK_MAIN();
