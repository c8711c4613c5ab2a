#include "nilcomm/catalog.hpp"
#include "nilcomm/cohomology.hpp"
#include "nilcomm/errors.hpp"
#include "nilcomm/linalg.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace nilcomm;

namespace {

const std::string kDim3 = std::string(NILCOMM_CATALOG_DIR) + "/dim3.nca";
const std::string kDim4 = std::string(NILCOMM_CATALOG_DIR) + "/dim4.nca";
const std::string kDim5 = std::string(NILCOMM_CATALOG_DIR) + "/dim5.nca";

const Presentation& find(const std::vector<Presentation>& all, const std::string& name) {
    for (const auto& p : all)
        if (p.name == name) return p;
    throw Error("missing " + name);
}

void BM_Rref(benchmark::State& state) {
    std::size_t n = static_cast<std::size_t>(state.range(0));
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> d(-9, 9);
    CMatrix m(n, Vec(n, Cyclotomic(1)));
    for (auto& row : m)
        for (auto& x : row) x = Cyclotomic(1, d(rng));
    for (auto _ : state) benchmark::DoNotOptimize(rref(m, n, 1).rank);
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_CdCheck(benchmark::State& state) {
    static const auto all = load_catalog(kDim5);
    AlgebraTable a = all[static_cast<std::size_t>(state.range(0))].table();
    for (auto _ : state) benchmark::DoNotOptimize(check_identity(a, Identity::cd).holds);
}
BENCHMARK(BM_CdCheck)->Arg(0)->Arg(200);

void BM_CdCocycleSpace(benchmark::State& state) {
    static const auto all = load_catalog(kDim4);
    AlgebraTable a = find(all, "N4s_14").table();
    for (auto _ : state) benchmark::DoNotOptimize(cd_cocycle_space(a).dim());
}
BENCHMARK(BM_CdCocycleSpace);

void BM_VerifyCatalog(benchmark::State& state) {
    std::vector<std::string> files{kDim3, kDim4};
    for (auto _ : state) benchmark::DoNotOptimize(verify_catalog(files).passed);
}
BENCHMARK(BM_VerifyCatalog)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
