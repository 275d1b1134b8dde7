#pragma once

// Benchmark harness: solve, time, verify and aggregate.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "udc/gen.hpp"
#include "udc/io.hpp"
#include "udc/oracle.hpp"
#include "udc/registry.hpp"

namespace udc {

struct TimedCover {
  Cover cover;
  double seconds = 0.0;
};

/// Runs one algorithm, timing only the solve call on a monotonic clock.
TimedCover timed_solve(Algorithm a, std::span<const Point> points);

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BenchConfig {
  std::vector<Algorithm> algorithms;
  /// Either a generator (reseeded as seed + trial for every trial) ...
  std::optional<GenSpec> generator;
  /// ... or a fixed pointset shared by all trials.
  std::vector<Point> points;
  std::string instance;
  std::size_t trials = 1;
  bool verify = true;
  double eps = kDefaultVerifyEps;
  /// Applied to every trial's points before solving (online algorithms are
  /// order sensitive).
  std::optional<std::uint64_t> shuffle_seed;
  /// Worker threads across (algorithm, trial) pairs; each solve is
  /// single-threaded.
  std::size_t jobs = 1;
};

struct BenchResult {
  /// Ordered by (algorithm position in config, trial).
  std::vector<BenchRecord> records;
  /// One per algorithm, same order.
  std::vector<BenchSummary> summaries;
};

/// Name for a generated instance, e.g. "square-a100000-n1000".
std::string instance_name(const GenSpec& spec);

/// Points for trial `trial` of the config (generated or copied, then
/// shuffled when a shuffle seed is set).
std::vector<Point> trial_points(const BenchConfig& config, std::size_t trial);

/// Throws VerificationError on the first invalid cover (when verifying) and
/// std::invalid_argument on an empty algorithm list or zero trials.
BenchResult run_bench(const BenchConfig& config);

}  // namespace udc
