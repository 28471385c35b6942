#include <benchmark/benchmark.h>

#include <memory>

#include "csemi/explorer.hpp"

using namespace csemi;

namespace {

ConePtr plane_cone() {
    return std::make_shared<const Cone>(
        Cone::from_rays({LatticePoint{3, 1}, LatticePoint{1, 2}}));
}

OrderPtr plane_grlex() { return std::make_shared<const MatrixOrder>(MatrixOrder::grlex(2)); }

void BM_CountByGenus(benchmark::State& state) {
    ConePtr cone = plane_cone();
    OrderPtr order = plane_grlex();
    int gmax = static_cast<int>(state.range(0));
    std::uint64_t nodes = 0;
    for (auto _ : state) {
        GenusReport r = count_by_genus(cone, order, gmax, {.workers = 1});
        benchmark::DoNotOptimize(r.counts.back());
        nodes += r.expansions;
    }
    state.counters["expansions/s"] =
        benchmark::Counter(static_cast<double>(nodes), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_CountByGenus)->Arg(6)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_EffectiveSons(benchmark::State& state) {
    // Expand a node a few levels down, where generator sets have grown.
    CSemigroup node = CSemigroup::root(plane_cone(), plane_grlex());
    for (int i = 0; i < 6; ++i) node = node.effective_son(node.eligible_count() - 1);
    for (auto _ : state) {
        for (int k = 0; k < node.eligible_count(); ++k)
            benchmark::DoNotOptimize(node.effective_son(k).edim());
    }
}
BENCHMARK(BM_EffectiveSons);

void BM_RandomBranchWithWilf(benchmark::State& state) {
    ConePtr cone = plane_cone();
    OrderPtr order = plane_grlex();
    for (auto _ : state) {
        BranchReport r = random_branch(cone, order, static_cast<int>(state.range(0)), 7);
        benchmark::DoNotOptimize(r.steps.size());
    }
}
BENCHMARK(BM_RandomBranchWithWilf)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

} // namespace
