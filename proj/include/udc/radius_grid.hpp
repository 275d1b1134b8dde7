#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "udc/geom.hpp"

namespace udc {

/// Uniform-grid multiset of points answering "nearest stored point within
/// radius r" by probing the 3x3 block of cells around the query. Correct for
/// any r <= cell_side.
///
/// Single writer: queries and mutations must not interleave across threads.
class RadiusGrid {
 public:
  struct Hit {
    Point point;
    double dist_sq;
  };

  explicit RadiusGrid(double cell_side = 1.0);

  void insert(Point p);

  /// Nearest stored point with distance <= r. Ties: smallest squared
  /// distance, then earliest insertion.
  [[nodiscard]] std::optional<Hit> nearest_within(Point q, double r) const;

  /// Removes one copy of a stored point equal to p (exact coordinates).
  bool remove(Point p);

  [[nodiscard]] std::size_t size() const { return size_; }
  [[nodiscard]] bool empty() const { return size_ == 0; }
  [[nodiscard]] double cell_side() const { return cell_side_; }

  /// All stored points, in no particular order.
  [[nodiscard]] std::vector<Point> points() const;

 private:
  struct Bucket {
    std::vector<Point> points;
    std::vector<std::uint64_t> seq;
  };

  double cell_side_;
  std::unordered_map<GridKey, Bucket, GridKeyHash> cells_;
  std::size_t size_ = 0;
  std::uint64_t next_seq_ = 0;
};

}  // namespace udc
