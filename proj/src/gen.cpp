#include "udc/gen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace udc {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

void require_area(double area) {
  if (!(area > 0.0) || !std::isfinite(area)) throw InputError("area must be positive and finite");
}

// Clamp for the rare case where u * side rounds up to side.
double below_side(double v, double side) { return v < side ? v : std::nextafter(side, 0.0); }

// Splits sorted coordinates into two monotone chains and returns the edge
// components; they sum to zero.
std::vector<double> chain_components(std::vector<double> c, Xoshiro256& rng) {
  std::sort(c.begin(), c.end());
  const std::size_t n = c.size();
  const double lo = c.front();
  const double hi = c.back();
  double last_a = lo;
  double last_b = lo;
  std::vector<double> v;
  v.reserve(n);
  for (std::size_t k = 1; k + 1 < n; ++k) {
    if (rng.next() >> 63) {
      v.push_back(c[k] - last_a);
      last_a = c[k];
    } else {
      v.push_back(last_b - c[k]);
      last_b = c[k];
    }
  }
  v.push_back(hi - last_a);
  v.push_back(last_b - hi);
  return v;
}

}  // namespace

Xoshiro256::Xoshiro256(std::uint64_t seed) {
  std::uint64_t state = seed;
  for (auto& word : s_) word = splitmix64(state);
}

std::uint64_t Xoshiro256::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Xoshiro256::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

__extension__ using u128 = unsigned __int128;

std::uint64_t Xoshiro256::below(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection.
  u128 m = static_cast<u128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      m = static_cast<u128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

void seeded_shuffle(std::span<Point> points, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  for (std::size_t k = points.size(); k > 1; --k) {
    std::swap(points[k - 1], points[rng.below(k)]);
  }
}

std::string shape_name(const Shape& shape) {
  struct Namer {
    std::string operator()(const SquareShape&) const { return "square"; }
    std::string operator()(const DiskShape&) const { return "disk"; }
    std::string operator()(const ConvexShape&) const { return "convex"; }
    std::string operator()(const AnnulusShape&) const { return "annulus"; }
  };
  return std::visit(Namer{}, shape);
}

std::vector<Point> gen_square(std::size_t n, double area, std::uint64_t seed) {
  require_area(area);
  const double side = std::sqrt(area);
  Xoshiro256 rng(seed);
  std::vector<Point> pts(n);
  for (Point& p : pts) {
    p.x = below_side(rng.uniform() * side, side);
    p.y = below_side(rng.uniform() * side, side);
  }
  return pts;
}

std::vector<Point> gen_disk(std::size_t n, double area, std::uint64_t seed) {
  require_area(area);
  const double radius = std::sqrt(area / std::numbers::pi);
  Xoshiro256 rng(seed);
  std::vector<Point> pts(n);
  for (Point& p : pts) {
    const double r = radius * std::sqrt(rng.uniform());
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    p = {r * std::cos(theta), r * std::sin(theta)};
  }
  return pts;
}

std::vector<Point> gen_convex(std::size_t n, double area, std::uint64_t seed) {
  require_area(area);
  if (n < 3) throw InputError("convex pointsets need at least 3 points");
  const double side = std::sqrt(area);
  Xoshiro256 rng(seed);

  std::vector<double> xs(n);
  std::vector<double> ys(n);
  for (double& x : xs) x = rng.uniform();
  for (double& y : ys) y = rng.uniform();
  const std::vector<double> vx = chain_components(std::move(xs), rng);
  std::vector<double> vy = chain_components(std::move(ys), rng);
  for (std::size_t k = n; k > 1; --k) std::swap(vy[k - 1], vy[rng.below(k)]);

  std::vector<std::size_t> order(n);
  std::vector<double> angle(n);
  for (std::size_t k = 0; k < n; ++k) {
    order[k] = k;
    angle[k] = std::atan2(vy[k], vx[k]);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return angle[a] < angle[b] || (angle[a] == angle[b] && a < b);
  });

  std::vector<Point> pts(n);
  Point cur{0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    pts[k] = cur;
    cur.x += vx[order[k]];
    cur.y += vy[order[k]];
  }

  double minx = pts[0].x, maxx = pts[0].x, miny = pts[0].y, maxy = pts[0].y;
  for (const Point& p : pts) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  // Affine maps preserve convex position; the 1e-9 shrink keeps the upper
  // bound exclusive.
  const double target = side * (1.0 - 1e-9);
  const double sx = target / (maxx - minx);
  const double sy = target / (maxy - miny);
  for (Point& p : pts) {
    p.x = below_side((p.x - minx) * sx, side);
    p.y = below_side((p.y - miny) * sy, side);
  }
  return pts;
}

std::vector<Point> gen_annulus(std::size_t n, double r_outer, double r_inner, std::uint64_t seed) {
  if (!(r_inner > 0.0) || !(r_inner < r_outer) || !std::isfinite(r_outer)) {
    throw InputError("annulus needs 0 < r_inner < r_outer");
  }
  const double inner2 = r_inner * r_inner;
  const double span2 = r_outer * r_outer - inner2;
  Xoshiro256 rng(seed);
  std::vector<Point> pts(n);
  for (Point& p : pts) {
    const double r = std::sqrt(inner2 + rng.uniform() * span2);
    const double theta = 2.0 * std::numbers::pi * rng.uniform();
    p = {r * std::cos(theta), r * std::sin(theta)};
  }
  return pts;
}

std::vector<Point> generate(const GenSpec& spec) {
  struct Gen {
    const GenSpec& spec;
    std::vector<Point> operator()(const SquareShape& s) const {
      return gen_square(spec.n, s.area, spec.seed);
    }
    std::vector<Point> operator()(const DiskShape& s) const {
      return gen_disk(spec.n, s.area, spec.seed);
    }
    std::vector<Point> operator()(const ConvexShape& s) const {
      return gen_convex(spec.n, s.area, spec.seed);
    }
    std::vector<Point> operator()(const AnnulusShape& s) const {
      return gen_annulus(spec.n, s.r_outer, s.r_inner, spec.seed);
    }
  };
  return std::visit(Gen{spec}, spec.shape);
}

}  // namespace udc
