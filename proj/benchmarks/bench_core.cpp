#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "vmrt/variety.hpp"
#include "vmrt/compactification.hpp"
#include "vmrt/family.hpp"
#include "vmrt/omega_builder.hpp"

using namespace vmrt;

namespace {

const VarietySpec& fixture(const std::string& name) {
  static std::map<std::string, VarietySpec> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    VarietySpec spec = builtin_spec(name);
    if (!spec.omega) spec.omega = build_omega(*spec.chart).omega;
    it = cache.emplace(name, std::move(spec)).first;
  }
  return it->second;
}

const char* kNames[] = {"veronese-2-3", "veronese-2-4", "veronese-3-3"};

void BM_Multiply(benchmark::State& state) {
  const OmegaForm& omega = *fixture(kNames[state.range(0)]).omega;
  SampleStream s(1);
  const GroupElement a = unflatten(omega, s.next_vector(omega.dim_g()));
  const GroupElement b = unflatten(omega, s.next_vector(omega.dim_g()));
  for (auto _ : state) benchmark::DoNotOptimize(multiply(omega, a, b));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_Multiply)->DenseRange(0, 2);

void BM_Rank(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  SampleStream s(2);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) rows.push_back(s.next_vector(n));
  const Mat m = Mat::from_rows(rows, n);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(32);

void BM_BuildOmega(benchmark::State& state) {
  const ChartRef chart = builtin_spec(kNames[state.range(0)]).chart;
  for (auto _ : state) benchmark::DoNotOptimize(build_omega(*chart));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_BuildOmega)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_HtCheck(benchmark::State& state) {
  const VarietySpec& spec = fixture(kNames[state.range(0)]);
  const LineFamily family(*spec.omega, spec.chart);
  SampleStream s(3);
  const Vec p = s.next_vector(spec.chart->param_dim());
  const GroupElement x = unflatten(*spec.omega, s.next_vector(spec.omega->dim_g()));
  const Vec delta = s.next_vector(spec.chart->param_dim());
  const GrassmannChart g = family.primary_chart(p, x);
  for (auto _ : state) benchmark::DoNotOptimize(check_h_t_identity(family, g, p, x, delta, Scalar(2)));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_HtCheck)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_MuHat(benchmark::State& state) {
  const VarietySpec& spec = fixture(kNames[state.range(0)]);
  const OmegaForm& omega = *spec.omega;
  SampleStream s(4);
  const Vec p = s.next_vector(spec.chart->param_dim());
  const GroupElement x = unflatten(omega, s.next_vector(omega.dim_g()));
  const PBundlePoint pt = OnSection{spec.chart, line_through(omega, x, spec.chart->lift(p))};
  for (auto _ : state) benchmark::DoNotOptimize(mu_hat(omega, pt));
  state.SetLabel(kNames[state.range(0)]);
}
BENCHMARK(BM_MuHat)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
