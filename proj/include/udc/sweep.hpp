#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "udc/geom.hpp"

namespace udc {

/// Vertical segment on a restriction line: the centers on that line whose
/// unit disk covers one point.
struct VSegment {
  double x = 0.0;
  double top = 0.0;
  double bottom = 0.0;
};

/// Greedy stabbing: repeatedly take the unstabbed segment with the highest
/// top (ties: lower bottom first) and stab it at its bottom. Every segment
/// containing that ordinate counts as stabbed. Returns the stab points in
/// stab order. All segments must share the same x.
std::vector<Point> stab_segments(std::span<const VSegment> segs);

/// Strip-and-stab algorithm. `passes` is 6 for LL-2014 (strip system shifted
/// by sqrt(3)/6 between passes, best pass kept, ties to the lowest shift) or
/// 1 for the single-pass LL-2014-1P.
Cover ll2014(std::span<const Point> points, int passes = 6);

struct BlmsResult {
  Cover cover;
  /// Disks placed before empty ones are eliminated (4 per anchor).
  std::size_t placed_disks = 0;
  std::vector<Point> anchors;
};

/// The four disk centers placed for an anchor, in assignment order:
/// center, right, upper, lower.
std::array<Point, 4> blms_quad(Point anchor);

/// Left-to-right anchor sweep with empty-disk elimination.
BlmsResult blms2017_detailed(std::span<const Point> points);

Cover blms2017(std::span<const Point> points);

}  // namespace udc
