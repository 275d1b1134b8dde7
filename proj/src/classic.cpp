#include "udc/classic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>

namespace udc {

Cover g1991(std::span<const Point> points) {
  std::map<std::int64_t, std::vector<Point>> strips;
  for (const Point& p : points) {
    strips[static_cast<std::int64_t>(std::floor(p.y / kSqrt2))].push_back(p);
  }
  Cover cover;
  for (auto& [iy, strip] : strips) {
    std::sort(strip.begin(), strip.end(),
              [](const Point& a, const Point& b) { return a.x < b.x; });
    const double cy = (static_cast<double>(iy) + 0.5) * kSqrt2;
    std::size_t k = 0;
    while (k < strip.size()) {
      const double left = strip[k].x;
      const double right = left + kSqrt2;
      while (k < strip.size() && strip[k].x <= right) ++k;
      cover.centers.push_back({left + kInvSqrt2, cy});
    }
  }
  return cover;
}

std::array<Point, 6> ccfm_spawn_inactive(Point p) {
  return {{
      {p.x + kSqrt3, p.y},
      {p.x + kHalfSqrt3, p.y + 1.5},
      {p.x + kHalfSqrt3, p.y - 1.5},
      {p.x - kHalfSqrt3, p.y + 1.5},
      {p.x - kSqrt3, p.y},
      {p.x - kHalfSqrt3, p.y - 1.5},
  }};
}

CcfmState::CcfmState() : active_(1.0), inactive_(1.0) {}

void CcfmState::activate_and_spawn(Point p) {
  active_.insert(p);
  active_list_.push_back(p);
  for (const Point& s : ccfm_spawn_inactive(p)) {
    // Both center collections are sets; an exact repeat would survive a
    // promotion and break active/inactive disjointness.
    if (const auto hit = active_.nearest_within(s, 1.0); hit && hit->dist_sq == 0.0) continue;
    if (const auto hit = inactive_.nearest_within(s, 1.0); hit && hit->dist_sq == 0.0) continue;
    inactive_.insert(s);
  }
}

void CcfmState::add(Point p) {
  if (active_.nearest_within(p, 1.0)) return;
  if (inactive_.empty()) {
    activate_and_spawn(p);
    return;
  }
  if (const auto q = inactive_.nearest_within(p, 1.0)) {
    inactive_.remove(q->point);
    active_.insert(q->point);
    active_list_.push_back(q->point);
  } else {
    activate_and_spawn(p);
  }
}

Cover ccfm1997(std::span<const Point> points) {
  CcfmState state;
  for (const Point& p : points) state.add(p);
  return Cover{state.active()};
}

Cover dgt2018(std::span<const Point> points) {
  RadiusGrid centers(1.0);
  Cover cover;
  for (const Point& p : points) {
    if (centers.nearest_within(p, 1.0)) continue;
    centers.insert(p);
    cover.centers.push_back(p);
  }
  return cover;
}

}  // namespace udc
