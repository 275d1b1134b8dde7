#include "udc/radius_grid.hpp"

#include <cassert>
#include <stdexcept>

#include "udc/simd.hpp"

namespace udc {

RadiusGrid::RadiusGrid(double cell_side) : cell_side_(cell_side) {
  if (!(cell_side > 0.0)) throw std::invalid_argument("RadiusGrid cell side must be positive");
}

void RadiusGrid::insert(Point p) {
  Bucket& b = cells_[cell_of(p, cell_side_)];
  b.points.push_back(p);
  b.seq.push_back(next_seq_++);
  ++size_;
}

std::optional<RadiusGrid::Hit> RadiusGrid::nearest_within(Point q, double r) const {
  assert(r <= cell_side_);
  if (size_ == 0) return std::nullopt;
  const double r2 = r * r;
  const GridKey c = cell_of(q, cell_side_);
  const Bucket* best_bucket = nullptr;
  simd::Nearest best;
  std::uint64_t best_seq = 0;
  for (std::int64_t di = -1; di <= 1; ++di) {
    for (std::int64_t dj = -1; dj <= 1; ++dj) {
      const auto it = cells_.find({c.i + di, c.j + dj});
      if (it == cells_.end() || it->second.points.empty()) continue;
      const Bucket& b = it->second;
      const simd::Nearest hit = simd::nearest(q, b.points);
      if (hit.dist_sq > r2) continue;
      const std::uint64_t s = b.seq[hit.index];
      if (best_bucket == nullptr || hit.dist_sq < best.dist_sq ||
          (hit.dist_sq == best.dist_sq && s < best_seq)) {
        best = hit;
        best_bucket = &b;
        best_seq = s;
      }
    }
  }
  if (best_bucket == nullptr) return std::nullopt;
  return Hit{best_bucket->points[best.index], best.dist_sq};
}

bool RadiusGrid::remove(Point p) {
  const auto it = cells_.find(cell_of(p, cell_side_));
  if (it == cells_.end()) return false;
  Bucket& b = it->second;
  for (std::size_t k = 0; k < b.points.size(); ++k) {
    if (b.points[k] == p) {
      // Order-preserving erase keeps insertion order inside the bucket.
      b.points.erase(b.points.begin() + static_cast<std::ptrdiff_t>(k));
      b.seq.erase(b.seq.begin() + static_cast<std::ptrdiff_t>(k));
      if (b.points.empty()) cells_.erase(it);
      --size_;
      return true;
    }
  }
  return false;
}

std::vector<Point> RadiusGrid::points() const {
  std::vector<Point> out;
  out.reserve(size_);
  for (const auto& [key, bucket] : cells_) {
    out.insert(out.end(), bucket.points.begin(), bucket.points.end());
  }
  return out;
}

}  // namespace udc
