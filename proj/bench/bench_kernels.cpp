// Parallel kernels against their serial references.

#include <vector>

#include <benchmark/benchmark.h>

#include "persw/bundle/bundle.hpp"
#include "persw/datasets/datasets.hpp"
#include "persw/projective/projective.hpp"

using namespace persw;

namespace {

bundle::LiftedCloud mobius(int k) { return datasets::add_noise(datasets::circle_tautological(k, 1.0), 0.01, 1); }

const projective::ProjectiveTriangulation& rp1() {
    static const auto t = projective::triangulate_rp(2);
    return t;
}

template <auto Kernel>
void distance_matrix(benchmark::State& state) {
    const auto c = mobius(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(c));
    state.SetComplexityN(state.range(0));
}

template <auto Kernel>
void face_values(benchmark::State& state) {
    const auto c = mobius(static_cast<int>(state.range(0)));
    const auto k = barycentric_subdivision(bundle::lifted_rips(c, 0.2, 2).complex());
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(k, rp1()));
    state.counters["vertices"] = static_cast<double>(k.vertex_count());
}

template <auto Kernel>
void hausdorff(benchmark::State& state) {
    const auto c = mobius(static_cast<int>(state.range(0)));
    const auto d = datasets::add_noise(c, 0.05, 2);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(c, d));
}

template <auto Kernel>
void grid(benchmark::State& state) {
    const auto c = mobius(static_cast<int>(state.range(0)));
    std::vector<double> ts;
    for (int i = 0; i < 16; ++i) ts.push_back(0.03 * i);
    for (auto _ : state) benchmark::DoNotOptimize(Kernel(c, rp1(), ts, bundle::default_subdiv_limit));
}

}  // namespace

BENCHMARK(distance_matrix<bundle::distance_matrix_serial>)->Name("distance_matrix/serial")->Arg(200)->Arg(1000);
BENCHMARK(distance_matrix<bundle::distance_matrix>)->Name("distance_matrix/parallel")->Arg(200)->Arg(1000)->UseRealTime();
BENCHMARK(face_values<bundle::vertex_face_values_serial>)->Name("vertex_face_values/serial")->Arg(100)->Arg(300);
BENCHMARK(face_values<bundle::vertex_face_values>)->Name("vertex_face_values/parallel")->Arg(100)->Arg(300)->UseRealTime();
BENCHMARK(hausdorff<bundle::hausdorff_distance_serial>)->Name("hausdorff/serial")->Arg(500)->Arg(2000);
BENCHMARK(hausdorff<bundle::hausdorff_distance>)->Name("hausdorff/parallel")->Arg(500)->Arg(2000)->UseRealTime();
BENCHMARK(grid<bundle::evaluate_grid_serial>)->Name("evaluate_grid/serial")->Arg(60)->Arg(150);
BENCHMARK(grid<bundle::evaluate_grid>)->Name("evaluate_grid/parallel")->Arg(60)->Arg(150)->UseRealTime();

BENCHMARK_MAIN();
