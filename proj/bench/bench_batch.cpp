#include <benchmark/benchmark.h>

#include <omp.h>

#include "facelex/batch.hpp"
#include "facelex/fixtures.hpp"

using namespace facelex;

namespace {

const Polytope& cube4() {
  static const Polytope p = fixtures::cube(4);
  return p;
}

void BM_CertifyFacesSerial(benchmark::State& state) {
  const auto faces = proper_faces(cube4());
  for (auto _ : state) benchmark::DoNotOptimize(certify_faces_serial(cube4(), faces));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(faces.size()));
}

void BM_CertifyFacesParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const auto faces = proper_faces(cube4());
  for (auto _ : state) benchmark::DoNotOptimize(certify_faces(cube4(), faces));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(faces.size()));
}

void BM_EquivalenceSerial(benchmark::State& state) {
  const auto faces = proper_faces(cube4());
  for (auto _ : state) benchmark::DoNotOptimize(equivalence_reports_serial(cube4(), faces));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(faces.size()));
}

void BM_EquivalenceParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const auto faces = proper_faces(cube4());
  for (auto _ : state) benchmark::DoNotOptimize(equivalence_reports(cube4(), faces));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(faces.size()));
}

}  // namespace

BENCHMARK(BM_CertifyFacesSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CertifyFacesParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EquivalenceSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EquivalenceParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
