// Parallel vs serial: GL4 predicate scans and the exhaustive automorphism search.

#include <benchmark/benchmark.h>

#include "heis/heisenberg.hpp"
#include "heis/orbits.hpp"

using namespace heis;

namespace {

template <unsigned Q>
std::vector<ScanKernel<GF<Q>>> kernels(const std::string& spec) {
  Field k = make_field(spec);
  GF<Q> s{};
  std::vector<ScanKernel<GF<Q>>> ks;
  for (auto& l : scan_labels(k)) {
    auto p = l.params(k);
    ks.emplace_back(l.str(), l.tag, FamilyParams<GF<Q>>{to_scalar(p.c, s), to_scalar(p.d, s), to_scalar(p.t, s)},
                    convert(representative(l, k), s));
  }
  return ks;
}

void BM_ScanGF2(benchmark::State& state) {
  auto ks = kernels<2>("gf:2");
  for (auto _ : state) benchmark::DoNotOptimize(predicate_scan(ks, state.range(0) != 0));
  state.SetItemsProcessed(state.iterations() * 20160);
}
BENCHMARK(BM_ScanGF2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// first two of the 80 first columns of GL4(F3)
void BM_ScanGF3Slice(benchmark::State& state) {
  auto ks = kernels<3>("gf:3");
  for (auto _ : state) benchmark::DoNotOptimize(predicate_scan(ks, state.range(0) != 0, 2));
  state.SetItemsProcessed(state.iterations() * 606528);
}
BENCHMARK(BM_ScanGF3Slice)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExhaustiveAutSPerp(benchmark::State& state) {
  Field k = make_field("gf:2");
  Subspace<Elem> rep;
  for (auto& l : finite_orbit_labels(k)) {
    if (l.tag == Tag::LineS && l.perp) rep = representative(l, k);
  }
  for (auto _ : state) benchmark::DoNotOptimize(exhaustive_automorphisms_gf2(rep, state.range(0) != 0));
}
BENCHMARK(BM_ExhaustiveAutSPerp)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
