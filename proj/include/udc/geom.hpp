#pragma once

// Core value types and the sqrt(2) grid arithmetic shared by every cover
// algorithm. All disks are closed and have radius 1.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace udc {

inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kInvSqrt2 = 0.70710678118654752440;
inline constexpr double kSqrt3 = 1.73205080756887729353;
inline constexpr double kHalfSqrt3 = 0.86602540378443864676;
inline constexpr double kSqrt3Over6 = 0.28867513459481288225;
// Gap between the inner square alpha(i,j) and the boundary of its cell.
inline constexpr double kInnerGap = 0.29289321881345247560;  // 1 - sqrt(2)/2

// Largest coordinate magnitude accepted by validate_points(). Keeps grid keys
// exactly representable through the SIMD double->int64 conversion.
inline constexpr double kMaxCoordinate = 1125899906842624.0;  // 2^50

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

static_assert(sizeof(Point) == 2 * sizeof(double), "Point must be two packed doubles");

/// A set of unit disks, stored as their centers.
struct Cover {
  std::vector<Point> centers;

  [[nodiscard]] std::size_t size() const { return centers.size(); }
  [[nodiscard]] bool empty() const { return centers.empty(); }
  friend bool operator==(const Cover&, const Cover&) = default;
};

struct GridKey {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend bool operator==(const GridKey&, const GridKey&) = default;
  friend auto operator<=>(const GridKey&, const GridKey&) = default;
};

struct GridKeyHash {
  std::size_t operator()(const GridKey& k) const noexcept {
    // boost::hash_combine style mixing of the two coordinates.
    std::size_t h = std::hash<std::int64_t>{}(k.i);
    h ^= std::hash<std::int64_t>{}(k.j) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Axis-parallel box. A default-constructed box is a point-box at the origin;
/// use BBox::of() to start from a real point.
struct BBox {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  static BBox of(Point p) { return {p.x, p.y, p.x, p.y}; }

  void add(Point p) {
    if (p.x < xmin) xmin = p.x;
    if (p.x > xmax) xmax = p.x;
    if (p.y < ymin) ymin = p.y;
    if (p.y > ymax) ymax = p.y;
  }

  [[nodiscard]] bool contains(Point p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }

  [[nodiscard]] Point center() const { return {0.5 * (xmin + xmax), 0.5 * (ymin + ymax)}; }

  [[nodiscard]] double diagonal_sq() const {
    const double w = xmax - xmin;
    const double h = ymax - ymin;
    return w * w + h * h;
  }

  friend bool operator==(const BBox&, const BBox&) = default;
};

BBox bbox_union(const BBox& a, const BBox& b);

/// Squared diagonal of the smallest box containing both a and b.
double bbox_union_diagonal_sq(const BBox& a, const BBox& b);

inline double dist_sq(Point a, Point b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// Cell sigma(i,j) of the sqrt(2) grid containing p. Cells are
/// lower-inclusive and upper-exclusive on both axes.
inline GridKey cell_of(Point p) {
  return {static_cast<std::int64_t>(std::floor(p.x / kSqrt2)),
          static_cast<std::int64_t>(std::floor(p.y / kSqrt2))};
}

/// Same as cell_of() for an arbitrary positive cell side.
inline GridKey cell_of(Point p, double side) {
  return {static_cast<std::int64_t>(std::floor(p.x / side)),
          static_cast<std::int64_t>(std::floor(p.y / side))};
}

/// Center of the grid-disk D(i,j), the unit disk circumscribing sigma(i,j).
inline Point grid_disk_center(GridKey k) {
  return {kSqrt2 * static_cast<double>(k.i) + kInvSqrt2,
          kSqrt2 * static_cast<double>(k.j) + kInvSqrt2};
}

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws InputError naming the first point that is non-finite or whose
/// magnitude exceeds kMaxCoordinate.
void validate_points(std::span<const Point> points);

}  // namespace udc
