#include <gtest/gtest.h>

#include <optional>

#include "brute.hpp"
#include "udc/radius_grid.hpp"

namespace udc {
namespace {

TEST(RadiusGrid, InsertThenFindSelf) {
  RadiusGrid g;
  g.insert({2.5, -3.5});
  const auto hit = g.nearest_within({2.5, -3.5}, 1.0);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->point, (Point{2.5, -3.5}));
  EXPECT_EQ(hit->dist_sq, 0.0);
}

TEST(RadiusGrid, FarQueryMisses) {
  RadiusGrid g;
  g.insert({0, 0});
  EXPECT_FALSE(g.nearest_within({5, 5}, 1.0));
}

TEST(RadiusGrid, PicksNearer) {
  RadiusGrid g;
  g.insert({0, 0});
  g.insert({0.6, 0});
  const auto hit = g.nearest_within({0.5, 0}, 1.0);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->point, (Point{0.6, 0}));
}

TEST(RadiusGrid, EmptyAndBoundary) {
  RadiusGrid g;
  EXPECT_FALSE(g.nearest_within({0, 0}, 1.0));
  g.insert({0, 0});
  ASSERT_TRUE(g.nearest_within({1, 0}, 1.0));
  EXPECT_EQ(g.nearest_within({1, 0}, 1.0)->point, (Point{0, 0}));
  EXPECT_FALSE(g.nearest_within({1.0001, 0}, 1.0));
}

TEST(RadiusGrid, RemoveSemantics) {
  RadiusGrid g;
  g.insert({1, 1});
  EXPECT_TRUE(g.remove({1, 1}));
  EXPECT_FALSE(g.nearest_within({1, 1}, 1.0));
  EXPECT_FALSE(g.remove({1, 1}));
  EXPECT_FALSE(g.remove({7, 7}));

  g.insert({3, 3});
  g.insert({3, 3});
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.remove({3, 3}));
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(g.nearest_within({3, 3}, 1.0));
}

TEST(RadiusGrid, TieBreaksByInsertionOrder) {
  RadiusGrid g;
  g.insert({0.5, 0});
  g.insert({-0.5, 0});
  g.insert({0, 0.5});
  EXPECT_EQ(g.nearest_within({0, 0}, 1.0)->point, (Point{0.5, 0}));
  ASSERT_TRUE(g.remove({0.5, 0}));
  EXPECT_EQ(g.nearest_within({0, 0}, 1.0)->point, (Point{-0.5, 0}));
  g.insert({0.5, 0});  // re-inserted: now the latest
  EXPECT_EQ(g.nearest_within({0, 0}, 1.0)->point, (Point{-0.5, 0}));
}

// Linear scan with the same rule: minimum dist_sq, then earliest insertion.
std::optional<Point> scan(const std::vector<Point>& stored, Point q, double r) {
  std::optional<Point> best;
  double bd = 0;
  for (const Point& p : stored) {
    const double d = dist_sq(p, q);
    if (d <= r * r && (!best || d < bd)) {
      best = p;
      bd = d;
    }
  }
  return best;
}

TEST(RadiusGrid, AgreesWithLinearScan) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 1 + seed * 5;
    const bool lattice = seed % 2 == 0;
    auto stored = lattice ? test::lattice_points(n, 6, 0.5, seed) : test::random_points(n, 6.0, seed);
    RadiusGrid g;
    for (const Point& p : stored) g.insert(p);
    // Remove a few to exercise the order-preserving erase.
    for (std::size_t k = 0; k < stored.size() / 5; ++k) {
      const Point victim = stored[k * 3 % stored.size()];
      ASSERT_TRUE(g.remove(victim));
      stored.erase(std::find(stored.begin(), stored.end(), victim));
    }
    const auto queries = lattice ? test::lattice_points(100, 7, 0.5, seed + 99)
                                 : test::random_points(100, 7.0, seed + 99);
    for (const Point& q : queries) {
      for (const double r : {1.0, 0.5}) {
        const auto want = scan(stored, q, r);
        const auto got = g.nearest_within(q, r);
        ASSERT_EQ(want.has_value(), got.has_value()) << "seed " << seed;
        if (want) EXPECT_EQ(*want, got->point);
      }
    }
  }
}

}  // namespace
}  // namespace udc
