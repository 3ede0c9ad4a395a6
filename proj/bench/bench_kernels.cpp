// Serial reference vs OpenMP kernels, plus the epsilon0 scan.
#include <benchmark/benchmark.h>

#include <vector>

#include "rescool/kernels.hpp"
#include "rescool/models.hpp"
#include "rescool/random.hpp"
#include "rescool/sweep.hpp"

namespace {

using rescool::cplx;

std::vector<cplx> random_buffer(std::size_t n, std::uint64_t seed) {
    rescool::Rng rng(seed);
    std::vector<cplx> v(n);
    for (auto& x : v) x = {rng.uniform() - 0.5, rng.uniform() - 0.5};
    return v;
}

template <bool Parallel>
void BM_Matmul(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto a = random_buffer(n * n, 1);
    auto b = random_buffer(n * n, 2);
    std::vector<cplx> out(n * n);
    for (auto _ : state) {
        if constexpr (Parallel)
            rescool::kernels::parallel::matmul(a, b, out, n, n, n);
        else
            rescool::kernels::serial::matmul(a, b, out, n, n, n);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n * n));
}

template <bool Parallel>
void BM_Kron(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto a = random_buffer(16, 3);
    auto b = random_buffer(n * n, 4);
    std::vector<cplx> out(16 * n * n);
    for (auto _ : state) {
        if constexpr (Parallel)
            rescool::kernels::parallel::kron(a, 4, 4, b, n, n, out);
        else
            rescool::kernels::serial::kron(a, 4, 4, b, n, n, out);
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void BM_Spectral(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto v = random_buffer(n * n, 5);
    auto f = random_buffer(n, 6);
    std::vector<cplx> out(n * n);
    for (auto _ : state) {
        if constexpr (Parallel)
            rescool::kernels::parallel::spectral_assemble(v, f, out, n);
        else
            rescool::kernels::serial::spectral_assemble(v, f, out, n);
        benchmark::DoNotOptimize(out.data());
    }
}

template <bool Parallel>
void BM_Scan(benchmark::State& state) {
    const auto model = rescool::build_aklt(1);
    const auto phi = rescool::basis_state_from_bits("1100", 4);
    rescool::SweepConfig cfg;
    cfg.points = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto r = Parallel ? rescool::scan(model, cfg, phi) : rescool::scan_serial(model, cfg, phi);
        benchmark::DoNotOptimize(r.peak_epsilon);
    }
}

}  // namespace

BENCHMARK(BM_Matmul<false>)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_Matmul<true>)->Arg(64)->Arg(256)->Arg(512);
BENCHMARK(BM_Kron<false>)->Arg(64)->Arg(256);
BENCHMARK(BM_Kron<true>)->Arg(64)->Arg(256);
BENCHMARK(BM_Spectral<false>)->Arg(64)->Arg(256);
BENCHMARK(BM_Spectral<true>)->Arg(64)->Arg(256);
BENCHMARK(BM_Scan<false>)->Arg(100);
BENCHMARK(BM_Scan<true>)->Arg(100);

BENCHMARK_MAIN();
