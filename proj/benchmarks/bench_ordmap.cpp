#include <benchmark/benchmark.h>

#include <cstdint>

#include <ordmap/conjecture.hpp>
#include <ordmap/existence.hpp>
#include <ordmap/group.hpp>
#include <ordmap/linear_map.hpp>
#include <ordmap/spectrum.hpp>

namespace {

using namespace ordmap;

void BM_ElementOrderDihedral(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  GroupSpec g = GroupSpec::dihedral(n);
  std::vector<Element> elements = enumerate_elements(g);
  for (auto _ : state) {
    std::uint64_t total = 0;
    for (const Element& e : elements) total += element_order(g, e);
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * elements.size()));
}
BENCHMARK(BM_ElementOrderDihedral)->Arg(100)->Arg(1000);

void BM_OrderSpectrumProduct(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  GroupSpec g = GroupSpec::product({n, 2 * n});
  for (auto _ : state) {
    benchmark::DoNotOptimize(order_spectrum(g));
  }
}
BENCHMARK(BM_OrderSpectrumProduct)->Arg(12)->Arg(60);

void BM_VerifyDihedralMap(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  LinearMapSpec spec = dihedral_paper_map(n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_map(spec, ComparisonMode::Divides));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * 2 * n));
}
BENCHMARK(BM_VerifyDihedralMap)->Arg(100)->Arg(1000);

void BM_ExistsBijection(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  OrderSpectrum src = order_spectrum(GroupSpec::dihedral(n));
  OrderSpectrum dst = order_spectrum(GroupSpec::cyclic(2 * n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exists_bijection(src, dst, ComparisonMode::Divides));
  }
}
BENCHMARK(BM_ExistsBijection)->Arg(60)->Arg(360);

void BM_ConjectureSingle(benchmark::State& state) {
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(test_conjecture(n));
  }
}
BENCHMARK(BM_ConjectureSingle)->Arg(30)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
