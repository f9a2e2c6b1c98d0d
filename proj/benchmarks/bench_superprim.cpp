#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "superprim/hecke.hpp"
#include "superprim/prim_order.hpp"
#include "superprim/restriction.hpp"
#include "superprim/star_action.hpp"

namespace {

using namespace superprim;

// Dominant, far from every wall: large decreasing ε block, δ block pushed
// negative so that odd pairings stay away from zero.
Weight far_dominant(const RootSystem& rs) {
  std::vector<Rational> eps;
  std::vector<Rational> delta;
  for (std::size_t i = 0; i < rs.eps_rank(); ++i) eps.emplace_back(1000 - 97 * static_cast<std::int64_t>(i));
  for (std::size_t j = 0; j < rs.delta_rank(); ++j) delta.emplace_back(500 - 89 * static_cast<std::int64_t>(j));
  return Weight(eps, delta);
}

void BM_ElementTable(benchmark::State& state) {
  const RootSystem rs = build_root_system(Family::osp, 3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    ElementTable table{WeylGroup(rs)};
    benchmark::DoNotOptimize(table.size());
  }
}
BENCHMARK(BM_ElementTable)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_KazhdanLusztigSymmetric(benchmark::State& state) {
  const auto table = std::make_shared<const ElementTable>(
      WeylGroup(build_root_system(Family::gl, static_cast<int>(state.range(0)), 0)));
  for (auto _ : state) {
    KazhdanLusztig kl(table);
    benchmark::DoNotOptimize(kl.mu(0, table->longest()));
  }
  state.counters["order"] = static_cast<double>(table->size());
}
BENCHMARK(BM_KazhdanLusztigSymmetric)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_LeftCells(benchmark::State& state) {
  const auto table = std::make_shared<const ElementTable>(WeylGroup(build_root_system(Family::gl, 5, 0)));
  for (auto _ : state) {
    KazhdanLusztig kl(table);
    benchmark::DoNotOptimize(kl.left_cells().size());
  }
}
BENCHMARK(BM_LeftCells)->Unit(benchmark::kMillisecond);

void BM_StarOrbit(benchmark::State& state) {
  const RootSystem rs = build_root_system(Family::osp, 3, static_cast<int>(state.range(0)));
  const auto table = std::make_shared<const ElementTable>(WeylGroup(rs));
  const Weight nu = far_dominant(rs);
  for (auto _ : state) {
    StarOrbit orbit(table, nu);
    benchmark::DoNotOptimize(orbit.size());
  }
}
BENCHMARK(BM_StarOrbit)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_PenkovRestrict(benchmark::State& state) {
  const RootSystem rs = build_root_system(Family::osp, 3, static_cast<int>(state.range(0)));
  const Weight nu = far_dominant(rs);
  for (auto _ : state) {
    auto restricted = penkov_restrict(rs, nu);
    benchmark::DoNotOptimize(restricted.distinct());
  }
}
BENCHMARK(BM_PenkovRestrict)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_IdealIncludes(benchmark::State& state) {
  const RootSystem rs = build_root_system(Family::osp, 3, 2);
  const PrimitiveOrder order(rs);
  const auto table = std::make_shared<const ElementTable>(WeylGroup(rs));
  const StarOrbit orbit(table, far_dominant(rs));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, orbit.size() - 1);
  (void)order.kl();
  for (auto _ : state) {
    const auto cert = order.ideal_includes(orbit[pick(rng)], orbit[pick(rng)]);
    benchmark::DoNotOptimize(cert.verdict);
  }
}
BENCHMARK(BM_IdealIncludes)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
