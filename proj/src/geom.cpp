#include "udc/geom.hpp"

#include <algorithm>

namespace udc {

BBox bbox_union(const BBox& a, const BBox& b) {
  return {std::min(a.xmin, b.xmin), std::min(a.ymin, b.ymin), std::max(a.xmax, b.xmax),
          std::max(a.ymax, b.ymax)};
}

double bbox_union_diagonal_sq(const BBox& a, const BBox& b) {
  return bbox_union(a, b).diagonal_sq();
}

void validate_points(std::span<const Point> points) {
  for (std::size_t k = 0; k < points.size(); ++k) {
    const Point p = points[k];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InputError("point " + std::to_string(k) + " has a non-finite coordinate");
    }
    if (std::fabs(p.x) > kMaxCoordinate || std::fabs(p.y) > kMaxCoordinate) {
      throw InputError("point " + std::to_string(k) + " exceeds the supported coordinate range");
    }
  }
}

}  // namespace udc
