#include "udc/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace udc {
namespace {

std::vector<Point> sorted_by_x(std::span<const Point> points) {
  std::vector<Point> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  return sorted;
}

std::vector<Point> ll_single_pass(const std::vector<Point>& pts, double shift) {
  std::vector<Point> centers;
  std::vector<VSegment> segs;
  const std::size_t n = pts.size();
  double right = pts.front().x + shift;
  std::size_t current = 0;
  while (current < n) {
    const std::size_t first = current;
    while (current < n && pts[current].x < right) ++current;
    if (current > first) {
      const double line = right - kHalfSqrt3;
      segs.clear();
      for (std::size_t k = first; k < current; ++k) {
        const double d = pts[k].x - line;
        const double half = std::sqrt(std::max(0.0, 1.0 - d * d));
        segs.push_back({line, pts[k].y + half, pts[k].y - half});
      }
      const auto stabs = stab_segments(segs);
      centers.insert(centers.end(), stabs.begin(), stabs.end());
    }
    if (current < n) {
      // Smallest positive multiple of sqrt(3) that puts the next point
      // strictly left of the boundary; skips runs of empty strips.
      const double gap = pts[current].x - right;
      right += (std::floor(gap / kSqrt3) + 1.0) * kSqrt3;
      while (pts[current].x >= right) right += kSqrt3;
    }
  }
  return centers;
}

constexpr double kAssignSlackSq = (1.0 + 1e-9) * (1.0 + 1e-9);

}  // namespace

std::vector<Point> stab_segments(std::span<const VSegment> segs) {
  std::vector<VSegment> order(segs.begin(), segs.end());
  std::sort(order.begin(), order.end(), [](const VSegment& a, const VSegment& b) {
    return a.top > b.top || (a.top == b.top && a.bottom < b.bottom);
  });
  std::vector<Point> out;
  std::set<double> stabs;
  for (const VSegment& s : order) {
    const auto it = stabs.lower_bound(s.bottom);
    if (it != stabs.end() && *it <= s.top) continue;
    stabs.insert(s.bottom);
    out.push_back({s.x, s.bottom});
  }
  return out;
}

Cover ll2014(std::span<const Point> points, int passes) {
  if (passes < 1) throw std::invalid_argument("ll2014 needs at least one pass");
  if (points.empty()) return {};
  const std::vector<Point> pts = sorted_by_x(points);
  std::vector<Point> best;
  for (int pass = 0; pass < passes; ++pass) {
    auto centers = ll_single_pass(pts, pass * kSqrt3Over6);
    if (pass == 0 || centers.size() < best.size()) best = std::move(centers);
  }
  return Cover{std::move(best)};
}

std::array<Point, 4> blms_quad(Point a) {
  return {{
      a,
      {a.x + kSqrt3, a.y},
      {a.x + kHalfSqrt3, a.y + 1.5},
      {a.x + kHalfSqrt3, a.y - 1.5},
  }};
}

BlmsResult blms2017_detailed(std::span<const Point> points) {
  struct Anchor {
    Point at;
    std::array<Point, 4> disks;
    std::array<std::size_t, 4> occupancy{};
  };

  const std::vector<Point> pts = sorted_by_x(points);
  std::vector<Anchor> anchors;
  // Anchors with x >= p.x - 2, keyed by y; the deque holds them in x order
  // so retiring from the left is O(1) each.
  std::multimap<double, std::size_t> by_y;
  std::deque<std::multimap<double, std::size_t>::iterator> window;

  for (const Point& p : pts) {
    while (!window.empty() && anchors[window.front()->second].at.x < p.x - 2.0) {
      by_y.erase(window.front());
      window.pop_front();
    }

    std::size_t owner = anchors.size();
    double owner_d = 0.0;
    for (auto it = by_y.lower_bound(p.y - 2.0); it != by_y.end() && it->first <= p.y + 2.0; ++it) {
      const double d = dist_sq(p, anchors[it->second].at);
      if (owner == anchors.size() || d < owner_d || (d == owner_d && it->second < owner)) {
        owner = it->second;
        owner_d = d;
      }
    }
    if (owner == anchors.size() || owner_d > 4.0) {
      owner = anchors.size();
      anchors.push_back({p, blms_quad(p), {}});
      window.push_back(by_y.emplace(p.y, owner));
    }

    Anchor& a = anchors[owner];
    std::size_t slot = 4;
    std::size_t closest = 0;
    double closest_d = dist_sq(p, a.disks[0]);
    for (std::size_t q = 0; q < 4; ++q) {
      const double d = dist_sq(p, a.disks[q]);
      if (d <= 1.0) {
        slot = q;
        break;
      }
      if (d < closest_d) {
        closest = q;
        closest_d = d;
      }
    }
    if (slot == 4) {
      if (closest_d > kAssignSlackSq) {
        throw std::logic_error("blms2017: point not covered by its anchor's four disks");
      }
      slot = closest;
    }
    ++a.occupancy[slot];
  }

  BlmsResult result;
  result.placed_disks = 4 * anchors.size();
  for (const Anchor& a : anchors) {
    result.anchors.push_back(a.at);
    for (std::size_t q = 0; q < 4; ++q) {
      if (a.occupancy[q] > 0) result.cover.centers.push_back(a.disks[q]);
    }
  }
  return result;
}

Cover blms2017(std::span<const Point> points) { return blms2017_detailed(points).cover; }

}  // namespace udc
