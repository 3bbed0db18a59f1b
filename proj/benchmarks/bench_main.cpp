#include <benchmark/benchmark.h>

#include <random>

#include "thh/brun_ss.hpp"
#include "thh/cyclic_algebra.hpp"
#include "thh/fp_linalg.hpp"
#include "thh/hochschild.hpp"
#include "thh/number_ring_global.hpp"
#include "thh/small_complexes.hpp"

using namespace thh;

namespace {

SparseFpMatrix random_sparse(int n, int per_col, std::uint64_t seed, i64 p) {
    std::mt19937_64 rng(seed);
    SparseFpMatrix m;
    m.rows = m.cols = n;
    m.col.resize(n);
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < per_col; ++k) m.col[c].push_back({static_cast<int>(rng() % n), static_cast<std::uint32_t>(1 + rng() % (p - 1))});
    for (auto& col : m.col) {
        std::sort(col.begin(), col.end());
        col.erase(std::unique(col.begin(), col.end(), [](auto& a, auto& b) { return a.first == b.first; }), col.end());
    }
    return m;
}

Tower fixB() { return Tower::make(3, 1, {{-3}, {0}, {1}}, 2, 0); }
Tower fixD() { return Tower::make(2, 1, {{-2}, {0}, {1}}, 3, 0); }

}  // namespace

static void BM_RankGF2(benchmark::State& st) {
    SparseFpMatrix m = random_sparse(static_cast<int>(st.range(0)), 4, 1, 2);
    for (auto _ : st) benchmark::DoNotOptimize(rank_mod_p(m, 2));
}
BENCHMARK(BM_RankGF2)->Arg(1000)->Arg(4000)->Arg(16000)->Unit(benchmark::kMillisecond);

static void BM_RankGF3(benchmark::State& st) {
    SparseFpMatrix m = random_sparse(static_cast<int>(st.range(0)), 4, 2, 3);
    for (auto _ : st) benchmark::DoNotOptimize(rank_mod_p(m, 3));
}
BENCHMARK(BM_RankGF3)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);

static void BM_OracleSplit(benchmark::State& st) {
    StructureAlgebra a = split_scalars(st.range(0) == 0 ? fixB() : fixD()).algebra;
    const int deg = st.range(0) == 0 ? 5 : 3;
    for (auto _ : st) benchmark::DoNotOptimize(hochschild_homology(a, deg).hh);
}
BENCHMARK(BM_OracleSplit)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_IntegerSNF(benchmark::State& st) {
    const int n = static_cast<int>(st.range(0));
    std::mt19937_64 rng(3);
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n));
    for (auto& row : m)
        for (auto& x : row) x = static_cast<long>(rng() % 201) - 100;
    for (auto _ : st) benchmark::DoNotOptimize(integer_snf(m));
}
BENCHMARK(BM_IntegerSNF)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMicrosecond);

static void BM_SmallComplexIntegral(benchmark::State& st) {
    Tower t = fixD().with_precision(8);
    for (auto _ : st) benchmark::DoNotOptimize(hh_A_via_small(t, Flavor::integral, 10));
}
BENCHMARK(BM_SmallComplexIntegral)->Unit(benchmark::kMillisecond);

static void BM_BrunAssemble(benchmark::State& st) {
    Tower t = fixB();
    for (auto _ : st) {
        TwoRowPage page = build_E2(t, 12);
        benchmark::DoNotOptimize(assemble(t, page, compute_Einfty(page)).degree);
    }
}
BENCHMARK(BM_BrunAssemble)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
