// Reference odometer vs the backtracking kernel, serial and with OpenMP
// workers, plus the word measure enumeration.
#include <benchmark/benchmark.h>

#include "ffactor/homcount.hpp"
#include "ffactor/presentation.hpp"
#include "ffactor/wordmeasure.hpp"

using namespace ffactor;

namespace {

  Presentation surface() {
    Presentation p{{"a", "b", "c", "d"}, {}};
    p.relators.push_back(Word::parse("a b a^-1 b^-1 c d c^-1 d^-1", p.generators));
    return p;
  }

  Presentation triangle() {
    Presentation p{{"a", "b"}, {}};
    p.relators.push_back(Word::parse("a a", p.generators));
    p.relators.push_back(Word::parse("b b b", p.generators));
    p.relators.push_back(Word::parse("a b a b a b a b", p.generators));
    return p;
  }

  FiniteGroup const& s4() {
    static FiniteGroup const g = make_symmetric(4);
    return g;
  }

  void reference_surface(benchmark::State& st) {
    auto const g = surface();
    for (auto _ : st) {
      benchmark::DoNotOptimize(reference::count_assignments(g, s4(), {}, false));
    }
  }

  void kernel_surface(benchmark::State& st) {
    auto const   g = surface();
    CountOptions opt;
    opt.workers = static_cast<std::size_t>(st.range(0));
    for (auto _ : st) {
      benchmark::DoNotOptimize(count_homs(g, s4(), {}, opt).total);
    }
  }

  void reference_triangle(benchmark::State& st) {
    auto const g = triangle();
    for (auto _ : st) {
      benchmark::DoNotOptimize(reference::count_assignments(g, s4(), {}, true));
    }
  }

  void kernel_triangle(benchmark::State& st) {
    auto const   g = triangle();
    CountOptions opt;
    opt.workers = static_cast<std::size_t>(st.range(0));
    for (auto _ : st) {
      benchmark::DoNotOptimize(count_epis(g, s4(), {}, opt).total);
    }
  }

  void word_measure(benchmark::State& st) {
    auto const w = Word::parse("x y z x^-1 y^-1 z^-1");
    auto const p = make_symmetric(5);
    for (auto _ : st) {
      benchmark::DoNotOptimize(word_value_distribution(w, 3, p, static_cast<std::size_t>(st.range(0))).total);
    }
  }

}  // namespace

BENCHMARK(reference_surface)->Unit(benchmark::kMillisecond);
BENCHMARK(kernel_surface)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(reference_triangle)->Unit(benchmark::kMicrosecond);
BENCHMARK(kernel_triangle)->Arg(1)->Arg(4)->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(word_measure)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
