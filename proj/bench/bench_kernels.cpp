// Parallel kernels against their serial references.
//
//   ./bench_kernels --benchmark_filter=closure

#include <benchmark/benchmark.h>

#include "sandwich/kernels.hpp"
#include "sandwich/semidirect.hpp"

using namespace sandwich;

namespace {

// W(C_n) acting on the roots of C_n.
std::vector<GroupElement> weyl_generators(int n) {
  RootSystem rs = build_root_system("C", n);
  auto dom = std::make_shared<const RootDomain>(rs.roots, rs.simple_roots);
  std::vector<GroupElement> gens;
  for (const auto& a : rs.simple_roots) gens.push_back(reflection(dom, a));
  return gens;
}

template <bool Parallel>
void BM_closure(benchmark::State& st) {
  auto gens = weyl_generators(static_cast<int>(st.range(0)));
  for (auto _ : st) {
    FiniteGroup g = Parallel ? group_closure(gens) : group_closure_serial(gens);
    benchmark::DoNotOptimize(g.order());
  }
}

template <bool Parallel>
void BM_table(benchmark::State& st) {
  FiniteGroup g = group_closure(weyl_generators(static_cast<int>(st.range(0))));
  for (auto _ : st) {
    auto t = Parallel ? multiplication_table(g) : multiplication_table_serial(g);
    benchmark::DoNotOptimize(t.data());
  }
}

template <bool Parallel>
void BM_killing(benchmark::State& st) {
  RootSystem rs = build_root_system(st.range(0) == 8 ? "E8" : "C", static_cast<int>(st.range(0)));
  for (auto _ : st) {
    KillingTable k = Parallel ? killing_table(rs.roots) : killing_table_serial(rs.roots);
    benchmark::DoNotOptimize(k.values.data());
  }
}

}  // namespace

BENCHMARK(BM_closure<true>)->Name("closure/parallel")->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_closure<false>)->Name("closure/serial")->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_table<true>)->Name("table/parallel")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_table<false>)->Name("table/serial")->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_killing<true>)->Name("killing/parallel")->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_killing<false>)->Name("killing/serial")->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
