#pragma once

#include <array>
#include <span>
#include <vector>

#include "udc/geom.hpp"
#include "udc/radius_grid.hpp"

namespace udc {

/// Strip algorithm, all strips in one sequential group. Points are
/// bucketed into horizontal strips of height sqrt(2); inside a strip a
/// sqrt(2) x sqrt(2) square is placed at the leftmost uncovered point and
/// takes every point with x in [q_x, q_x + sqrt(2)]. Each square becomes the
/// unit disk circumscribing it. Strips go bottom to top, squares left to right.
Cover g1991(std::span<const Point> points);

/// The six hexagonal candidate centers spawned around a new active center.
std::array<Point, 6> ccfm_spawn_inactive(Point p);

/// Online state: placed (active) centers plus hexagonal candidate (inactive)
/// centers promoted on demand. Both sets are grid indexed with cell side 1.
class CcfmState {
 public:
  CcfmState();

  void add(Point p);

  /// Active centers in activation order.
  [[nodiscard]] const std::vector<Point>& active() const { return active_list_; }
  [[nodiscard]] const RadiusGrid& active_index() const { return active_; }
  [[nodiscard]] const RadiusGrid& inactive_index() const { return inactive_; }

 private:
  void activate_and_spawn(Point p);

  RadiusGrid active_;
  RadiusGrid inactive_;
  std::vector<Point> active_list_;
};

Cover ccfm1997(std::span<const Point> points);

/// Online: a point becomes a center iff every existing center is more than
/// 1 away. Centers end up pairwise more than 1 apart.
Cover dgt2018(std::span<const Point> points);

}  // namespace udc
