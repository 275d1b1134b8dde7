#include <gtest/gtest.h>

#include <algorithm>

#include "udc/bench.hpp"

namespace udc {
namespace {

TEST(Registry, NamesAndLookup) {
  EXPECT_EQ(all_algorithms().size(), 9u);
  for (const AlgorithmInfo& a : all_algorithms()) {
    EXPECT_EQ(find_algorithm(a.name), a.id);
    EXPECT_EQ(find_algorithm(a.label), a.id);
    EXPECT_EQ(info(a.id).name, a.name);
  }
  EXPECT_EQ(find_algorithm("FASTCOVER++"), Algorithm::fastcover_pp);
  EXPECT_EQ(find_algorithm("LL-2014-1P"), Algorithm::ll2014_1p);
  EXPECT_FALSE(find_algorithm("gonzalez"));
  EXPECT_DOUBLE_EQ(info(Algorithm::ll2014).approx_factor, 25.0 / 6.0);
}

TEST(Bench, RowCountsAndMeans) {
  BenchConfig cfg;
  cfg.algorithms = {Algorithm::fastcover, Algorithm::dgt2018};
  cfg.generator = GenSpec{SquareShape{500}, 500, 10};
  cfg.trials = 3;
  const BenchResult r = run_bench(cfg);
  ASSERT_EQ(r.records.size(), 6u);
  ASSERT_EQ(r.summaries.size(), 2u);
  for (std::size_t a = 0; a < 2; ++a) {
    double sum = 0;
    for (std::size_t t = 0; t < 3; ++t) {
      const BenchRecord& rec = r.records[a * 3 + t];
      EXPECT_EQ(rec.trial, t);
      EXPECT_EQ(rec.seed, 10 + t);
      EXPECT_EQ(rec.n, 500u);
      EXPECT_EQ(rec.instance, "square-a500-n500");
      EXPECT_GE(rec.wall_time_s, 0.0);
      sum += static_cast<double>(rec.cover_size);
    }
    EXPECT_DOUBLE_EQ(r.summaries[a].mean_cover_size, sum / 3);
  }
  EXPECT_EQ(r.records[0].algorithm, "fastcover");
  EXPECT_EQ(r.records[3].algorithm, "dgt2018");
  // Trial t uses generator seed + t.
  EXPECT_EQ(r.records[1].cover_size, solve(Algorithm::fastcover, gen_square(500, 500, 11)).size());
}

TEST(Bench, ParallelMatchesSerial) {
  BenchConfig cfg;
  for (const AlgorithmInfo& a : all_algorithms()) cfg.algorithms.push_back(a.id);
  cfg.generator = GenSpec{DiskShape{800}, 800, 3};
  cfg.trials = 2;
  cfg.shuffle_seed = 5;
  const BenchResult serial = run_bench(cfg);
  cfg.jobs = 4;
  const BenchResult par = run_bench(cfg);
  ASSERT_EQ(serial.records.size(), par.records.size());
  for (std::size_t k = 0; k < par.records.size(); ++k) {
    EXPECT_EQ(serial.records[k].algorithm, par.records[k].algorithm);
    EXPECT_EQ(serial.records[k].cover_size, par.records[k].cover_size);
    EXPECT_EQ(serial.records[k].trial, par.records[k].trial);
  }
}

TEST(Bench, FixedPointsAndErrors) {
  BenchConfig cfg;
  cfg.algorithms = {Algorithm::g1991};
  cfg.points = {{0, 0}, {5, 5}};
  cfg.instance = "two";
  const BenchResult r = run_bench(cfg);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].cover_size, 2u);
  EXPECT_EQ(r.records[0].instance, "two");
  cfg.trials = 0;
  EXPECT_THROW(run_bench(cfg), std::invalid_argument);
  cfg.trials = 1;
  cfg.algorithms.clear();
  EXPECT_THROW(run_bench(cfg), std::invalid_argument);
}

TEST(Bench, TrialPointsShuffle) {
  BenchConfig cfg;
  cfg.points = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}};
  EXPECT_EQ(trial_points(cfg, 0), cfg.points);
  cfg.shuffle_seed = 1;
  auto a = trial_points(cfg, 0);
  auto b = trial_points(cfg, 0);
  EXPECT_EQ(a, b);
  std::sort(a.begin(), a.end(), [](Point p, Point q) { return p.x < q.x; });
  EXPECT_EQ(a, cfg.points);
}

}  // namespace
}  // namespace udc
