#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "brute.hpp"
#include "udc/geom.hpp"

namespace udc {
namespace {

TEST(CellOf, Examples) {
  EXPECT_EQ(cell_of({0, 0}), (GridKey{0, 0}));
  EXPECT_EQ(cell_of({3.0, -0.5}), (GridKey{2, -1}));
  EXPECT_EQ(cell_of({kSqrt2, kSqrt2}), (GridKey{1, 1}));
}

TEST(CellOf, FloorsNegatives) {
  EXPECT_EQ(cell_of({-0.0001, -1e-300}), (GridKey{-1, -1}));
  EXPECT_EQ(cell_of({-kSqrt2, -2 * kSqrt2}), (GridKey{-1, -2}));
  EXPECT_EQ(cell_of({-1.5, 0.0}), (GridKey{-2, 0}));
}

TEST(CellOf, PointInsideItsHalfOpenCell) {
  for (const Point& p : test::random_points(2000, 200.0, 11)) {
    const Point q{p.x - 100.0, p.y - 100.0};
    const GridKey k = cell_of(q);
    EXPECT_LE(kSqrt2 * static_cast<double>(k.i), q.x);
    EXPECT_GT(kSqrt2 * static_cast<double>(k.i + 1), q.x);
    EXPECT_LE(kSqrt2 * static_cast<double>(k.j), q.y);
    EXPECT_GT(kSqrt2 * static_cast<double>(k.j + 1), q.y);
  }
}

TEST(GridDiskCenter, Examples) {
  const Point c = grid_disk_center({0, 0});
  EXPECT_NEAR(c.x, 0.7071067811, 1e-10);
  EXPECT_NEAR(c.y, 0.7071067811, 1e-10);
  const Point d = grid_disk_center({2, -1});
  EXPECT_NEAR(d.x, 3.5355339, 1e-7);
  EXPECT_NEAR(d.y, -0.7071067, 1e-7);
}

TEST(GridDiskCenter, CircumscribesCell) {
  const Point c = grid_disk_center({0, 0});
  for (const Point corner : {Point{0, 0}, Point{kSqrt2, 0}, Point{0, kSqrt2}, Point{kSqrt2, kSqrt2}}) {
    EXPECT_NEAR(dist_sq(c, corner), 1.0, 1e-15);
  }
  for (const Point& p : test::random_points(2000, 500.0, 3)) {
    EXPECT_LE(dist_sq(p, grid_disk_center(cell_of(p))), 1.0 + 1e-12);
  }
}

TEST(DistSq, Examples) {
  EXPECT_EQ(dist_sq({0, 0}, {0, 0}), 0.0);
  EXPECT_EQ(dist_sq({0, 0}, {1, 0}), 1.0);
  EXPECT_EQ(dist_sq({0, 0}, {3, 4}), 25.0);
}

TEST(BBox, UnionDiagonal) {
  const BBox origin = BBox::of({0, 0});
  EXPECT_EQ(bbox_union_diagonal_sq(origin, origin), 0.0);
  EXPECT_NEAR(bbox_union_diagonal_sq(BBox::of({0.1, 0.1}), BBox::of({2.0, 0.1})), 3.61, 1e-12);
  EXPECT_EQ(bbox_union_diagonal_sq(BBox{0, 0, 1, 1}, BBox{1, 1, 2, 2}), 8.0);
}

TEST(BBox, UnionIsCommutativeAssociativeMonotone) {
  const auto pts = test::random_points(60, 10.0, 5);
  for (std::size_t k = 0; k + 2 < pts.size(); k += 3) {
    const BBox a = BBox::of(pts[k]);
    BBox b = BBox::of(pts[k + 1]);
    b.add(pts[k + 2]);
    const BBox c = BBox::of(pts[(k + 7) % pts.size()]);
    EXPECT_EQ(bbox_union(a, b), bbox_union(b, a));
    EXPECT_EQ(bbox_union(bbox_union(a, b), c), bbox_union(a, bbox_union(b, c)));
    EXPECT_GE(bbox_union(a, b).diagonal_sq(), a.diagonal_sq());
    EXPECT_GE(bbox_union(bbox_union(a, b), c).diagonal_sq(), bbox_union(a, b).diagonal_sq());
    EXPECT_TRUE(bbox_union(a, b).contains(pts[k + 2]));
  }
}

TEST(ValidatePoints, RejectsNonFiniteAndHuge) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  const std::vector<Point> good{{0, 0}, {-1e9, 1e9}};
  EXPECT_NO_THROW(validate_points(good));
  EXPECT_THROW(validate_points(std::vector<Point>{{0, nan}}), InputError);
  EXPECT_THROW(validate_points(std::vector<Point>{{inf, 0}}), InputError);
  EXPECT_THROW(validate_points(std::vector<Point>{{0, 2 * kMaxCoordinate}}), InputError);
}

}  // namespace
}  // namespace udc
