#include "udc/fastcover.hpp"

#include <algorithm>
#include <array>
#include <unordered_set>
#include <vector>

#include "udc/simd.hpp"

namespace udc {
namespace {

// Cell keys are computed in small blocks so the vector kernel can be used
// without an O(n) side array.
constexpr std::size_t kBlock = 256;

template <typename Visit>
void for_each_keyed(std::span<const Point> points, Visit&& visit) {
  std::array<GridKey, kBlock> keys;
  for (std::size_t base = 0; base < points.size(); base += kBlock) {
    const std::size_t len = std::min(kBlock, points.size() - base);
    const auto block = points.subspan(base, len);
    simd::cell_keys(block, kSqrt2, keys);
    for (std::size_t k = 0; k < len; ++k) visit(block[k], keys[k]);
  }
}

struct Neighbor {
  Direction dir;
  std::int64_t di;
  std::int64_t dj;
};

// Branch order of the neighbour test.
constexpr std::array<Neighbor, 4> kNeighborOrder{{
    {Direction::east, 1, 0},
    {Direction::west, -1, 0},
    {Direction::north, 0, 1},
    {Direction::south, 0, -1},
}};

// Runs the FastCover+ pass. With `track_boxes` the bounding box of every
// point assigned to a placed disk (own cell or covering neighbour) is kept.
template <bool track_boxes>
DiskTable plus_pass(std::span<const Point> points, std::vector<Point>* placed) {
  DiskTable table;
  for_each_keyed(points, [&](Point p, GridKey k) {
    if (const auto own = table.find(k); own != table.end()) {
      if constexpr (track_boxes) own->second.add(p);
      return;
    }
    for (const Neighbor& nb : kNeighborOrder) {
      if (!neighbor_threshold_check(p, k, nb.dir)) continue;
      const GridKey nk{k.i + nb.di, k.j + nb.dj};
      const auto it = table.find(nk);
      if (it == table.end()) continue;
      if (dist_sq(p, grid_disk_center(nk)) <= 1.0) {
        if constexpr (track_boxes) it->second.add(p);
        return;
      }
    }
    table.emplace(k, BBox::of(p));
    if (placed != nullptr) placed->push_back(grid_disk_center(k));
  });
  return table;
}

}  // namespace

Cover fast_cover(std::span<const Point> points) {
  Cover cover;
  std::unordered_set<GridKey, GridKeyHash> placed;
  for_each_keyed(points, [&](Point, GridKey k) {
    if (placed.insert(k).second) cover.centers.push_back(grid_disk_center(k));
  });
  return cover;
}

bool neighbor_threshold_check(Point p, GridKey k, Direction dir) {
  const auto i = static_cast<double>(k.i);
  const auto j = static_cast<double>(k.j);
  switch (dir) {
    case Direction::east:
      return p.x >= kSqrt2 * (i + 1.5) - 1.0;
    case Direction::west:
      return p.x <= kSqrt2 * (i - 0.5) + 1.0;
    case Direction::north:
      return p.y >= kSqrt2 * (j + 1.5) - 1.0;
    case Direction::south:
      return p.y <= kSqrt2 * (j - 0.5) + 1.0;
  }
  return false;
}

Cover fast_cover_plus(std::span<const Point> points) {
  Cover cover;
  plus_pass<false>(points, &cover.centers);
  return cover;
}

DiskTable fast_cover_plus_table(std::span<const Point> points) {
  return plus_pass<true>(points, nullptr);
}

Cover coalesce_pass(DiskTable table) {
  std::vector<GridKey> keys;
  keys.reserve(table.size());
  for (const auto& [k, box] : table) keys.push_back(k);
  std::sort(keys.begin(), keys.end());

  Cover cover;
  for (const GridKey& k : keys) {
    const auto self = table.find(k);
    if (self == table.end()) continue;  // already merged as a partner
    bool merged = false;
    for (std::int64_t di = -1; di <= 1 && !merged; ++di) {
      for (std::int64_t dj = -1; dj <= 1 && !merged; ++dj) {
        if (di == 0 && dj == 0) continue;
        const auto other = table.find({k.i + di, k.j + dj});
        if (other == table.end()) continue;
        const BBox u = bbox_union(self->second, other->second);
        if (u.diagonal_sq() <= 4.0) {
          cover.centers.push_back(u.center());
          table.erase(other);
          table.erase(self);
          merged = true;
        }
      }
    }
  }
  for (const GridKey& k : keys) {
    if (table.contains(k)) cover.centers.push_back(grid_disk_center(k));
  }
  return cover;
}

Cover fast_cover_pp(std::span<const Point> points) {
  return coalesce_pass(fast_cover_plus_table(points));
}

}  // namespace udc
