#include <benchmark/benchmark.h>

#include "diskrep/lattice.hpp"
#include "diskrep/measure.hpp"
#include "diskrep/synthesis.hpp"

using namespace diskrep;

static void BM_PseudoDistance(benchmark::State& state) {
    const Complex z(0.31, -0.44), w(0.72, 0.11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pseudo_distance(z, w));
    }
}
BENCHMARK(BM_PseudoDistance);

static void BM_BuildLattice(benchmark::State& state) {
    const double rho_max = 1.0 - 1.0 / double(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_lattice(0.5, rho_max));
    }
}
BENCHMARK(BM_BuildLattice)->Arg(10)->Arg(100);

static void BM_CellOf(benchmark::State& state) {
    const Lattice lat = build_lattice(0.3, 0.99);
    std::size_t i = 0;
    for (auto _ : state) {
        const double rho = 0.98 * double((i * 2654435761u) % 1000) / 1000.0;
        const Complex z(rho, 0.001 * double(i % 97));
        benchmark::DoNotOptimize(lat.cell_of(z));
        ++i;
    }
}
BENCHMARK(BM_CellOf);

static void BM_LocalizedAtomField(benchmark::State& state) {
    const Lattice lat = build_lattice(0.5, 0.99);
    std::vector<Atom> atoms;
    for (const Complex c : lat.centers()) atoms.push_back({c, Complex(0.01, 0.0)});
    const CapturedAtomIndex index(atoms, 0.5);
    std::size_t i = 0;
    for (auto _ : state) {
        const double rho = 0.97 * double((i * 40503u) % 1000) / 1000.0;
        benchmark::DoNotOptimize(index.variation_at(Complex(rho, -0.2 * rho)));
        ++i;
    }
}
BENCHMARK(BM_LocalizedAtomField);

static void BM_IntegrateDisk(benchmark::State& state) {
    QuadratureScheme scheme;
    scheme.radial_nodes = int(state.range(0));
    scheme.angular_nodes = 4 * scheme.radial_nodes;
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate_disk(
            [](Complex z) { return std::exp(z) / (2.0 - z); }, DiskWeight::area, scheme));
    }
}
BENCHMARK(BM_IntegrateDisk)->Arg(32)->Arg(96);

static void BM_MobiusSynthEval(benchmark::State& state) {
    const KernelFunction f = synth_mobius(polynomial_measure(2, 1));
    const Complex z(0.4, 0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(f(z));
    }
}
BENCHMARK(BM_MobiusSynthEval);

BENCHMARK_MAIN();
