#pragma once

// Seeded synthetic pointsets. Streams are pinned: xoshiro256** seeded by
// splitmix64, doubles taken from the top 53 bits. Identical arguments give
// bitwise-identical output on every platform with IEEE doubles.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "udc/geom.hpp"

namespace udc {

class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [0, 1).
  double uniform();
  /// Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t s_[4];
};

/// In-place Fisher-Yates shuffle driven by the given seed.
void seeded_shuffle(std::span<Point> points, std::uint64_t seed);

struct SquareShape {
  double area;
};
struct DiskShape {
  double area;
};
struct ConvexShape {
  double area;
};
struct AnnulusShape {
  double r_outer;
  double r_inner;
};

using Shape = std::variant<SquareShape, DiskShape, ConvexShape, AnnulusShape>;

struct GenSpec {
  Shape shape;
  std::size_t n = 0;
  std::uint64_t seed = 0;
};

std::string shape_name(const Shape& shape);

/// Uniform in [0, sqrt(area))^2.
std::vector<Point> gen_square(std::size_t n, double area, std::uint64_t seed);

/// Uniform in the disk of radius sqrt(area / pi) centered at the origin.
std::vector<Point> gen_disk(std::size_t n, double area, std::uint64_t seed);

/// n points in convex position inside [0, sqrt(area))^2 (Valtr's
/// construction: random coordinates split into two monotone chains, edge
/// vectors paired at random and sorted by angle, then scaled to the square).
/// Requires n >= 3.
std::vector<Point> gen_convex(std::size_t n, double area, std::uint64_t seed);

/// Area-uniform in the annulus r_inner <= r <= r_outer around the origin.
std::vector<Point> gen_annulus(std::size_t n, double r_outer, double r_inner, std::uint64_t seed);

/// Dispatches on spec.shape. Throws InputError on invalid parameters.
std::vector<Point> generate(const GenSpec& spec);

}  // namespace udc
