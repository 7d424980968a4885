#include "revival/hamiltonians.hpp"
#include "revival/operators.hpp"
#include "revival/pauli.hpp"
#include "revival/resource.hpp"
#include "revival/rng.hpp"
#include "revival/scrambling.hpp"

#include <benchmark/benchmark.h>

using namespace revival;

namespace {

const SpectralDecomposition& pxp_spectrum(int n) {
    static std::map<int, SpectralDecomposition> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, SpectralDecomposition::diagonalize(build_pxp(n))).first;
    return it->second;
}

void BM_DiagonalizePxp(benchmark::State& state) {
    const DenseOperator h = build_pxp(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(SpectralDecomposition::diagonalize(h));
    }
}
BENCHMARK(BM_DiagonalizePxp)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_EvolveState(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto& spec = pxp_spectrum(n);
    std::mt19937_64 rng = substream_rng(1, 0);
    const StateVector psi{random_unit_vector(spec.dim(), rng), n};
    double t = 0.0;
    for (auto _ : state) {
        t += 0.1;
        benchmark::DoNotOptimize(evolve_state(spec, psi, t));
    }
}
BENCHMARK(BM_EvolveState)->Arg(8)->Arg(10)->Unit(benchmark::kMicrosecond);

void BM_PauliOverlapPoint(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto& spec = pxp_spectrum(n);
    const PauliString z1 = PauliString::single(n, 1, PauliLetter::Z);
    double t = 0.0;
    for (auto _ : state) {
        t += 0.05;
        benchmark::DoNotOptimize(pauli_weight_overlap(spec, z1, t));
    }
}
BENCHMARK(BM_PauliOverlapPoint)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_AvgOtocPoint(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto& spec = pxp_spectrum(n);
    const SubsystemPair pair{{1}, {n}, n};
    double t = 0.0;
    for (auto _ : state) {
        t += 0.05;
        benchmark::DoNotOptimize(avg_otoc(spec, pair, t));
    }
}
BENCHMARK(BM_AvgOtocPoint)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_MonotoneR(benchmark::State& state) {
    SyntheticSpectrum s;
    s.rationals = {make_fraction(0, 1), make_fraction(1, 1), make_fraction(-1, 1),
                   make_fraction(2, 1)};
    s.irrationals = {Surd{{0, 1}, {1, 1}, 2}, Surd{{0, 1}, {1, 1}, 3}, Surd{{0, 1}, {1, 1}, 5},
                     Surd{{0, 1}, {1, 1}, 7}};
    const SyntheticResult res = build_synthetic(s, 11);
    const auto spec = SpectralDecomposition::diagonalize(res.hamiltonian);
    const EigenClassification cls = classify(spec, 1e-9, 64);
    std::mt19937_64 rng = substream_rng(2, 0);
    const StateVector psi{random_unit_vector(spec.dim(), rng), spec.n_qubits};
    const OptimizerBudget budget{2, 3, 7, 1};
    for (auto _ : state) {
        benchmark::DoNotOptimize(monotone_R(spec, cls, psi, budget));
    }
}
BENCHMARK(BM_MonotoneR)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
