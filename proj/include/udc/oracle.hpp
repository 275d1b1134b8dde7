#pragma once

// Ground truth: cover verification at benchmark scale and an exact minimum
// cover for tiny instances.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "udc/geom.hpp"

namespace udc {

inline constexpr double kDefaultVerifyEps = 1e-9;
inline constexpr std::size_t kMaxOptimalPoints = 12;

struct Uncovered {
  std::size_t index;
  /// Smallest squared distance to any center (infinity for an empty cover).
  double min_dist_sq;
};

struct VerifyReport {
  bool valid = true;
  std::vector<Uncovered> uncovered;
  std::size_t cover_size = 0;
};

/// Point i counts as covered iff some center is within distance (1 + eps).
/// Grid-accelerated; runs in expected O(n + s).
VerifyReport verify_cover(std::span<const Point> points, const Cover& cover,
                          double eps = kDefaultVerifyEps);

/// Input points plus, for every pair at distance <= 2, the centers of the
/// unit circles through both (one center at distance exactly 2).
/// Deduplicated to within 1e-12.
std::vector<Point> candidate_centers(std::span<const Point> points);

struct OptResult {
  std::size_t size = 0;
  Cover centers;
};

class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact minimum unit disk cover by branch and bound over candidate_centers().
/// Throws SizeLimitError for more than kMaxOptimalPoints points.
OptResult optimal_cover(std::span<const Point> points);

}  // namespace udc
