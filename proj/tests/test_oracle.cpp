#include <gtest/gtest.h>

#include <cmath>

#include "brute.hpp"
#include "udc/oracle.hpp"

namespace udc {
namespace {

bool has(const std::vector<Point>& v, Point p, double tol = 1e-12) {
  for (const Point& q : v) {
    if (std::abs(q.x - p.x) <= tol && std::abs(q.y - p.y) <= tol) return true;
  }
  return false;
}

TEST(Verify, Examples) {
  const std::vector<Point> on{{1, 0}};
  EXPECT_TRUE(verify_cover(on, Cover{{{0, 0}}}).valid);

  const std::vector<Point> off{{1.001, 0}};
  const VerifyReport r = verify_cover(off, Cover{{{0, 0}}});
  EXPECT_FALSE(r.valid);
  ASSERT_EQ(r.uncovered.size(), 1u);
  EXPECT_EQ(r.uncovered[0].index, 0u);
  EXPECT_NEAR(r.uncovered[0].min_dist_sq, 1.002001, 1e-12);

  EXPECT_TRUE(verify_cover({}, Cover{}).valid);
}

TEST(Verify, EmptyCoverIsInvalidNotThrown) {
  const std::vector<Point> p{{0, 0}, {5, 5}};
  const VerifyReport r = verify_cover(p, Cover{});
  EXPECT_FALSE(r.valid);
  EXPECT_EQ(r.uncovered.size(), 2u);
  EXPECT_TRUE(std::isinf(r.uncovered[0].min_dist_sq));
}

TEST(Verify, EpsWidensRadius) {
  const std::vector<Point> p{{1.0 + 1e-10, 0}};
  EXPECT_TRUE(verify_cover(p, Cover{{{0, 0}}}).valid);
  EXPECT_FALSE(verify_cover(p, Cover{{{0, 0}}}, 0.0).valid);
  EXPECT_TRUE(verify_cover(std::vector<Point>{{1.5, 0}}, Cover{{{0, 0}}}, 0.6).valid);
}

TEST(Verify, AgreesWithBruteForce) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto pts = test::random_points(300, 20.0, seed);
    const auto ctr = test::random_points(40 + seed * 3, 20.0, seed + 1000);
    const Cover c{ctr};
    const VerifyReport r = verify_cover(pts, c);
    std::size_t bad = 0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      double best = INFINITY;
      for (const Point& q : ctr) best = std::min(best, dist_sq(q, pts[k]));
      if (best > (1 + 1e-9) * (1 + 1e-9)) {
        ASSERT_LT(bad, r.uncovered.size());
        EXPECT_EQ(r.uncovered[bad].index, k);
        EXPECT_EQ(r.uncovered[bad].min_dist_sq, best);
        ++bad;
      }
    }
    EXPECT_EQ(bad, r.uncovered.size());
    EXPECT_EQ(r.valid, bad == 0);
    EXPECT_EQ(r.cover_size, ctr.size());
  }
}

TEST(Candidates, Examples) {
  EXPECT_EQ(candidate_centers(std::vector<Point>{{0, 0}}), (std::vector<Point>{{0, 0}}));

  const auto diam = candidate_centers(std::vector<Point>{{0, 0}, {2, 0}});
  EXPECT_TRUE(has(diam, {1, 0}));
  EXPECT_EQ(diam.size(), 3u);

  const auto pair = candidate_centers(std::vector<Point>{{0, 0}, {1, 0}});
  EXPECT_TRUE(has(pair, {0.5, kHalfSqrt3}, 1e-15));
  EXPECT_TRUE(has(pair, {0.5, -kHalfSqrt3}, 1e-15));
  for (const Point& c : pair) {
    if (c.x == 0.5) {
      EXPECT_NEAR(dist_sq(c, {0, 0}), 1.0, 1e-15);
      EXPECT_NEAR(dist_sq(c, {1, 0}), 1.0, 1e-15);
    }
  }
  EXPECT_EQ(candidate_centers(std::vector<Point>{{0, 0}, {2.5, 0}}).size(), 2u);
}

TEST(Candidates, Deduplicated) {
  const auto c = candidate_centers(std::vector<Point>{{0, 0}, {0, 0}, {1, 0}});
  for (std::size_t a = 0; a < c.size(); ++a) {
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      EXPECT_FALSE(std::abs(c[a].x - c[b].x) <= 1e-12 && std::abs(c[a].y - c[b].y) <= 1e-12);
    }
  }
}

TEST(Optimal, Examples) {
  EXPECT_EQ(optimal_cover(std::vector<Point>{{0, 0}, {3, 0}}).size, 2u);
  const std::vector<Point> tri{{0, 0}, {1, 0}, {0.5, 0.5}};
  EXPECT_EQ(optimal_cover(tri).size, 1u);
  EXPECT_EQ(test::exhaustive_opt(tri, candidate_centers(tri)), 1u);
  EXPECT_EQ(optimal_cover(test::seven_cell_config()).size, 1u);
  EXPECT_EQ(optimal_cover({}).size, 0u);
}

TEST(Optimal, SizeLimit) {
  EXPECT_NO_THROW(optimal_cover(test::random_points(kMaxOptimalPoints, 10.0, 1)));
  EXPECT_THROW(optimal_cover(test::random_points(kMaxOptimalPoints + 1, 10.0, 1)), SizeLimitError);
}

TEST(Optimal, ResultIsValidAndMatchesEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t n = 1 + seed % 6;
    const auto pts = seed % 3 == 0 ? test::lattice_points(n, 4, 0.5, seed) : test::random_points(n, 4.0, seed);
    const OptResult r = optimal_cover(pts);
    EXPECT_EQ(r.size, r.centers.size());
    EXPECT_TRUE(verify_cover(pts, r.centers).valid);
    EXPECT_EQ(r.size, test::exhaustive_opt(pts, candidate_centers(pts))) << "seed " << seed;
  }
}

TEST(Optimal, AddingPointNeverDecreases) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto pts = test::random_points(9, 4.0, seed);
    std::size_t prev = 0;
    for (std::size_t n = 1; n <= pts.size(); ++n) {
      const std::size_t cur = optimal_cover(std::span(pts).first(n)).size;
      EXPECT_GE(cur, prev);
      prev = cur;
    }
  }
}

}  // namespace
}  // namespace udc
