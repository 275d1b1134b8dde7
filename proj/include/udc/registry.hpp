#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "udc/geom.hpp"

namespace udc {

enum class Algorithm {
  g1991,
  ccfm1997,
  ll2014,
  ll2014_1p,
  blms2017,
  dgt2018,
  fastcover,
  fastcover_plus,
  fastcover_pp,
};

struct AlgorithmInfo {
  Algorithm id;
  /// Command-line name.
  std::string_view name;
  /// Conventional label used in tables.
  std::string_view label;
  /// Proven worst-case ratio |cover| / |OPT|.
  double approx_factor;
};

/// All nine algorithms in a fixed order.
std::span<const AlgorithmInfo> all_algorithms();

const AlgorithmInfo& info(Algorithm a);

/// Accepts the command-line name or the label, case-insensitively.
std::optional<Algorithm> find_algorithm(std::string_view name);

Cover solve(Algorithm a, std::span<const Point> points);

}  // namespace udc
