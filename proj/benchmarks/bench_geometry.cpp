#include <benchmark/benchmark.h>

#include <memory>

#include "csemi/counting.hpp"
#include "csemi/hilbert.hpp"

using namespace csemi;

namespace {

void BM_HilbertBasis62(benchmark::State& state) {
    Cone cone = Cone::from_rays({LatticePoint{3, 2, 0}, LatticePoint{0, 1, 0},
                                 LatticePoint{3, 5, 7}, LatticePoint{1, 8, 10},
                                 LatticePoint{13, 21, 33}});
    for (auto _ : state) benchmark::DoNotOptimize(hilbert_basis(cone).size());
}
BENCHMARK(BM_HilbertBasis62)->Unit(benchmark::kMillisecond);

void BM_ConeFromRays(benchmark::State& state) {
    std::vector<LatticePoint> rays = {LatticePoint{3, 2, 0}, LatticePoint{0, 1, 0},
                                      LatticePoint{3, 5, 7}, LatticePoint{1, 8, 10},
                                      LatticePoint{13, 21, 33}};
    for (auto _ : state) benchmark::DoNotOptimize(Cone::from_rays(rays).facets().size());
}
BENCHMARK(BM_ConeFromRays);

void BM_CountPreceding(benchmark::State& state) {
    // Counting below a heavy point, the dominant cost of deep Wilf walks.
    auto cone = std::make_shared<const Cone>(
        Cone::from_rays({LatticePoint{3, 2, 0}, LatticePoint{0, 1, 0}, LatticePoint{3, 5, 7},
                         LatticePoint{1, 8, 10}, LatticePoint{13, 21, 33}}));
    auto order = std::make_shared<const MatrixOrder>(MatrixOrder::random(3, 42));
    PrecedingCounter counter(cone, order);
    LatticePoint x{26, 42, 66}; // twice the heaviest ray
    for (auto _ : state) benchmark::DoNotOptimize(counter.count_preceding(x));
}
BENCHMARK(BM_CountPreceding);

} // namespace

BENCHMARK_MAIN();
