#include <string>

#include <benchmark/benchmark.h>

#include "lcslab/cli/builtin.hpp"
#include "lcslab/cli/manifold_def.hpp"
#include "lcslab/conditions.hpp"
#include "lcslab/geometry/manifold.hpp"

namespace {

const char* const kWarped4 = R"({
  "name": "warped4",
  "coords": ["t", "x", "y", "z"],
  "frame": [
    ["1", "0", "0", "0"],
    ["0", "t", "x", "0"],
    ["0", "0", "t^2", "y"],
    ["0", "0", "0", "t*x + 1"]
  ],
  "metric": [
    ["-1", "0", "0", "0"],
    ["1", "0", "0"],
    ["1", "0"],
    ["1"]
  ],
  "xi": 1
})";

lcs::Manifold manifold(int which) {
  const std::string text = which == 0 ? *lcs::cli::builtin_definition("example51") : std::string(kWarped4);
  return lcs::cli::build_manifold(lcs::cli::parse_manifold_def(text));
}

lcs::Exec exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? lcs::Exec::serial : lcs::Exec::parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(std::string(state.range(0) == 0 ? "example51" : "warped4") + "/" +
                 (state.range(1) == 0 ? "serial" : "parallel"));
}

void BM_GeometryStack(benchmark::State& state) {
  const lcs::Manifold m = manifold(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    lcs::Geometry geo(m, exec_of(state));
    benchmark::DoNotOptimize(geo.nabla_riemann().size());
  }
  label(state);
}

void BM_NablaRiemann(benchmark::State& state) {
  const lcs::Geometry geo(manifold(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto t = lcs::nabla_riemann(geo.frame(), geo.connection(), geo.curvature().riemann13, exec_of(state));
    benchmark::DoNotOptimize(t.size());
  }
  label(state);
}

void BM_MProjective(benchmark::State& state) {
  const lcs::Geometry geo(manifold(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto t = lcs::m_projective(geo.curvature(), geo.metric(), exec_of(state));
    benchmark::DoNotOptimize(t.size());
  }
  label(state);
}

void BM_FitSgr(benchmark::State& state) {
  const lcs::Geometry geo(manifold(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto fit = lcs::recurrence_fit(lcs::RecurrenceKind::sgr, geo, exec_of(state));
    benchmark::DoNotOptimize(fit.solved());
  }
  label(state);
}

void args(benchmark::internal::Benchmark* b) {
  for (int m : {0, 1}) {
    for (int e : {0, 1}) b->Args({m, e});
  }
  b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_GeometryStack)->Apply(args);
BENCHMARK(BM_NablaRiemann)->Apply(args);
BENCHMARK(BM_MProjective)->Apply(args);
BENCHMARK(BM_FitSgr)->Apply(args);

BENCHMARK_MAIN();
