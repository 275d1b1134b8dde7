#include "udc/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>

#include "udc/simd.hpp"

namespace udc {

VerifyReport verify_cover(std::span<const Point> points, const Cover& cover, double eps) {
  VerifyReport report;
  report.cover_size = cover.size();
  const double radius = 1.0 + eps;
  const double r2 = radius * radius;
  // Cell side >= radius, so a 3x3 probe sees every center that can cover.
  const double side = std::max(1.0, radius);

  std::unordered_map<GridKey, std::vector<Point>, GridKeyHash> grid;
  grid.reserve(cover.size());
  for (const Point& c : cover.centers) grid[cell_of(c, side)].push_back(c);

  constexpr std::size_t kBlock = 256;
  std::array<GridKey, kBlock> keys;
  for (std::size_t base = 0; base < points.size(); base += kBlock) {
    const std::size_t len = std::min(kBlock, points.size() - base);
    simd::cell_keys(points.subspan(base, len), side, keys);
    for (std::size_t k = 0; k < len; ++k) {
      const Point p = points[base + k];
      const GridKey c = keys[k];
      double best = std::numeric_limits<double>::infinity();
      for (std::int64_t di = -1; di <= 1 && best > r2; ++di) {
        for (std::int64_t dj = -1; dj <= 1 && best > r2; ++dj) {
          const auto it = grid.find({c.i + di, c.j + dj});
          if (it == grid.end()) continue;
          best = std::min(best, simd::nearest(p, it->second).dist_sq);
        }
      }
      // Failure path only: report the true nearest center, not just the
      // nearest one in the probed cells.
      if (!(best <= r2)) report.uncovered.push_back({base + k, simd::nearest(p, cover.centers).dist_sq});
    }
  }
  report.valid = report.uncovered.empty();
  return report;
}

std::vector<Point> candidate_centers(std::span<const Point> points) {
  constexpr double kDedupTol = 1e-12;
  std::vector<Point> raw(points.begin(), points.end());
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) {
      const Point p = points[a];
      const Point q = points[b];
      const double d2 = dist_sq(p, q);
      if (d2 == 0.0 || d2 > 4.0) continue;
      const Point mid{0.5 * (p.x + q.x), 0.5 * (p.y + q.y)};
      const double h2 = 1.0 - 0.25 * d2;
      if (h2 <= 0.0) {
        raw.push_back(mid);
        continue;
      }
      const double scale = std::sqrt(h2 / d2);
      const double ox = -(q.y - p.y) * scale;
      const double oy = (q.x - p.x) * scale;
      raw.push_back({mid.x + ox, mid.y + oy});
      raw.push_back({mid.x - ox, mid.y - oy});
    }
  }
  std::vector<Point> out;
  for (const Point& c : raw) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const Point& o) {
      return std::fabs(o.x - c.x) <= kDedupTol && std::fabs(o.y - c.y) <= kDedupTol;
    });
    if (!dup) out.push_back(c);
  }
  return out;
}

namespace {

struct BranchAndBound {
  std::vector<std::uint32_t> masks;
  std::vector<std::vector<std::size_t>> covering;  // per point, candidates covering it
  std::vector<std::size_t> chosen;
  std::vector<std::size_t> best;
  std::size_t best_size = 0;

  void search(std::uint32_t uncovered) {
    if (uncovered == 0) {
      if (chosen.size() < best_size) {
        best = chosen;
        best_size = chosen.size();
      }
      return;
    }
    if (chosen.size() + 1 >= best_size) return;
    const auto u = static_cast<std::size_t>(std::countr_zero(uncovered));
    for (const std::size_t c : covering[u]) {
      chosen.push_back(c);
      search(uncovered & ~masks[c]);
      chosen.pop_back();
    }
  }
};

}  // namespace

OptResult optimal_cover(std::span<const Point> points) {
  if (points.size() > kMaxOptimalPoints) {
    throw SizeLimitError("optimal_cover supports at most " + std::to_string(kMaxOptimalPoints) +
                         " points, got " + std::to_string(points.size()));
  }
  OptResult result;
  if (points.empty()) return result;

  std::vector<Point> ordered(points.begin(), points.end());
  std::sort(ordered.begin(), ordered.end(), [](const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  const std::vector<Point> cands = candidate_centers(ordered);
  const double r2 = (1.0 + kDefaultVerifyEps) * (1.0 + kDefaultVerifyEps);

  BranchAndBound bb;
  bb.covering.resize(ordered.size());
  for (std::size_t c = 0; c < cands.size(); ++c) {
    const auto m = static_cast<std::uint32_t>(simd::within_mask(cands[c], ordered, r2));
    bb.masks.push_back(m);
    for (std::size_t u = 0; u < ordered.size(); ++u) {
      if (m & (1u << u)) bb.covering[u].push_back(c);
    }
  }
  for (auto& list : bb.covering) {
    std::stable_sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
      return std::popcount(bb.masks[a]) > std::popcount(bb.masks[b]);
    });
  }
  // Incumbent: one covering disk per point.
  for (const auto& list : bb.covering) bb.best.push_back(list.front());
  bb.best_size = ordered.size();
  bb.search((1u << ordered.size()) - 1u);

  result.size = bb.best_size;
  for (const std::size_t c : bb.best) result.centers.centers.push_back(cands[c]);
  return result;
}

}  // namespace udc
