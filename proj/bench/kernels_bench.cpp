// Serial versus OpenMP kernels on translation actions of cyclic groups
// restricted to an interval.

#include <benchmark/benchmark.h>

#include <map>
#include <memory>

#include "pga/kernels.hpp"
#include "pga/partial_action.hpp"

using namespace pga;

namespace {

struct Instance {
  GroupPtr group;
  GlobalAction global;
  PartialAction partial;
};

const Instance& instance(std::size_t n) {
  static std::map<std::size_t, std::unique_ptr<Instance>> cache;
  auto& slot = cache[n];
  if (!slot) {
    auto group = build_cyclic_group(n);
    std::vector<std::vector<Index>> perms(n, std::vector<Index>(n));
    for (Index g = 0; g < n; ++g) {
      for (Index t = 0; t < n; ++t) perms[g][t] = static_cast<Index>((g + t) % n);
    }
    GlobalAction global(group, FiniteSet::numbered(n, "t"), perms);
    std::vector<Index> half;
    for (Index t = 0; t < n / 2; ++t) half.push_back(t);
    auto partial = restrict_global(global, half);
    slot = std::make_unique<Instance>(Instance{group, std::move(global), std::move(partial)});
  }
  return *slot;
}

template <auto Kernel>
void associativity(benchmark::State& state) {
  const auto& in = instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(in.group->order(), in.group->table()));
}

template <auto Kernel>
void on_view(benchmark::State& state) {
  const auto& in = instance(state.range(0));
  const auto view = in.partial.view();
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(view));
}

template <auto Kernel>
void homomorphism(benchmark::State& state) {
  const auto& in = instance(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Kernel(in.group->order(), in.global.size(), in.group->table(), in.global.perms()));
  }
}

template <auto Kernel>
void fixed_points(benchmark::State& state) {
  const auto& in = instance(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(in.group->order(), in.global.size(), in.global.perms()));
}

}  // namespace

#define PGA_BENCH_PAIR(fixture, kernel)                                                       \
  BENCHMARK_TEMPLATE(fixture, kernels::serial::kernel)->Name("serial/" #kernel)->RangeMultiplier(2)->Range(16, 128); \
  BENCHMARK_TEMPLATE(fixture, kernels::parallel::kernel)->Name("parallel/" #kernel)->RangeMultiplier(2)->Range(16, 128)

PGA_BENCH_PAIR(associativity, find_nonassociative);
PGA_BENCH_PAIR(on_view, find_intertwining_failure);
PGA_BENCH_PAIR(on_view, find_composition_failure);
PGA_BENCH_PAIR(on_view, find_equivalence_failure);
PGA_BENCH_PAIR(on_view, class_minima);
PGA_BENCH_PAIR(homomorphism, find_homomorphism_failure);
PGA_BENCH_PAIR(fixed_points, fixed_point_counts);

BENCHMARK_MAIN();
