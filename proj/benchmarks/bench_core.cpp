#include <benchmark/benchmark.h>

#include <random>

#include "realroots/mixed_volume.hpp"
#include "realroots/moments.hpp"
#include "realroots/root_count.hpp"

using namespace realroots;

namespace {

SupportSet cross() {
  return validate_support({{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
}

SupportSet band1(int lambda) {
  std::vector<LatticeVector> pts;
  for (int k = -lambda; k <= lambda; ++k) pts.push_back({k});
  return validate_support(pts);
}

}  // namespace

static void BM_DilateDisk(benchmark::State& state) {
  const auto body = BodySpec::ball(1, 2);
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(dilate_and_intersect(body, m));
  }
}
BENCHMARK(BM_DilateDisk)->Arg(10)->Arg(50)->Arg(100);

static void BM_ConvexHullDisk(benchmark::State& state) {
  const auto support = dilate_and_intersect(BodySpec::ball(1, 2), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(newton_polytope(support));
  }
}
BENCHMARK(BM_ConvexHullDisk)->Arg(20)->Arg(100);

static void BM_ConvexHull3D(benchmark::State& state) {
  const auto support = dilate_and_intersect(BodySpec::ball(1, 3), static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(newton_polytope(support));
  }
}
BENCHMARK(BM_ConvexHull3D)->Arg(3)->Arg(6);

static void BM_MomentMatrix(benchmark::State& state) {
  const auto support = dilate_and_intersect(BodySpec::ball(1, 2), 100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(moment_matrix(support));
  }
}
BENCHMARK(BM_MomentMatrix);

static void BM_MixedVolumePolytopes3D(benchmark::State& state) {
  const auto oct = newton_polytope(
      validate_support({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
  const auto cube = newton_polytope(validate_support(
      {{1, 1, 1}, {1, 1, -1}, {1, -1, 1}, {1, -1, -1},
       {-1, 1, 1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}}));
  const auto diam = newton_polytope(validate_support({{1, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {0, 0, -1}}));
  const std::vector<LatticePolytope> triple = {oct, cube, diam};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mixed_volume_polytopes(triple));
  }
}
BENCHMARK(BM_MixedVolumePolytopes3D);

static void BM_GaussianEstimator2D(benchmark::State& state) {
  Eigen::MatrixXd m1(2, 2), m2(2, 2);
  m1 << 4, 1, 1, 2;
  m2 << 1, -0.3, -0.3, 3;
  const std::vector<Ellipsoid> pair = {Ellipsoid{m1}, Ellipsoid{m2}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mixed_volume_ellipsoids(pair, state.range(0), 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GaussianEstimator2D)->Arg(10000)->Arg(100000);

static void BM_QuadratureOracle2D(benchmark::State& state) {
  Eigen::MatrixXd m1(2, 2), m2(2, 2);
  m1 << 4, 1, 1, 2;
  m2 << 1, -0.3, -0.3, 3;
  const Ellipsoid e1{m1}, e2{m2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mixed_volume_ellipsoids_oracle_2d(e1, e2));
  }
}
BENCHMARK(BM_QuadratureOracle2D);

static void BM_Deterministic3D(benchmark::State& state) {
  Eigen::MatrixXd m1(3, 3), m2(3, 3), m3(3, 3);
  m1 << 2, 0.2, 0, 0.2, 1, 0.1, 0, 0.1, 3;
  m2 << 1, 0, 0.3, 0, 2, 0, 0.3, 0, 1;
  m3 << 4, 0.5, 0, 0.5, 1, 0, 0, 0, 2;
  const std::vector<Ellipsoid> triple = {Ellipsoid{m1}, Ellipsoid{m2}, Ellipsoid{m3}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mixed_volume_ellipsoids_deterministic(triple));
  }
}
BENCHMARK(BM_Deterministic3D);

static void BM_CountRealRoots1D(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto s = band1(static_cast<int>(state.range(0)));
  const auto f = sample(s, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_real_roots_1d(f));
  }
}
BENCHMARK(BM_CountRealRoots1D)->Arg(3)->Arg(10);

static void BM_CountRealRoots2D(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto f1 = sample(cross(), rng);
  const auto f2 = sample(cross(), rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_real_roots_2d(f1, f2));
  }
}
BENCHMARK(BM_CountRealRoots2D);

BENCHMARK_MAIN();
