#include "udc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

namespace udc {
namespace {

std::string compact(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

TimedCover timed_solve(Algorithm a, std::span<const Point> points) {
  using Clock = std::chrono::steady_clock;
  TimedCover out;
  const auto start = Clock::now();
  out.cover = solve(a, points);
  const auto stop = Clock::now();
  out.seconds = std::chrono::duration<double>(stop - start).count();
  return out;
}

std::string instance_name(const GenSpec& spec) {
  struct Params {
    std::string operator()(const SquareShape& s) const { return "a" + compact(s.area); }
    std::string operator()(const DiskShape& s) const { return "a" + compact(s.area); }
    std::string operator()(const ConvexShape& s) const { return "a" + compact(s.area); }
    std::string operator()(const AnnulusShape& s) const {
      return "ro" + compact(s.r_outer) + "-ri" + compact(s.r_inner);
    }
  };
  return shape_name(spec.shape) + "-" + std::visit(Params{}, spec.shape) + "-n" +
         std::to_string(spec.n);
}

std::vector<Point> trial_points(const BenchConfig& config, std::size_t trial) {
  std::vector<Point> pts;
  if (config.generator) {
    GenSpec spec = *config.generator;
    spec.seed += trial;
    pts = generate(spec);
  } else {
    pts = config.points;
  }
  if (config.shuffle_seed) seeded_shuffle(pts, *config.shuffle_seed + trial);
  return pts;
}

BenchResult run_bench(const BenchConfig& config) {
  if (config.algorithms.empty()) throw std::invalid_argument("no algorithms selected");
  if (config.trials == 0) throw std::invalid_argument("trials must be at least 1");

  const std::string instance =
      config.generator ? instance_name(*config.generator) : config.instance;
  const std::size_t n_alg = config.algorithms.size();
  const std::size_t n_tasks = n_alg * config.trials;
  std::vector<BenchRecord> records(n_tasks);

  // Generated pointsets are shared by all algorithms of a trial.
  std::vector<std::vector<Point>> inputs(config.trials);
  for (std::size_t t = 0; t < config.trials; ++t) inputs[t] = trial_points(config, t);

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t task = next++; task < n_tasks; task = next++) {
      const std::size_t a = task / config.trials;
      const std::size_t t = task % config.trials;
      try {
        const Algorithm alg = config.algorithms[a];
        const auto& pts = inputs[t];
        const TimedCover run = timed_solve(alg, pts);
        if (config.verify) {
          const VerifyReport rep = verify_cover(pts, run.cover, config.eps);
          if (!rep.valid) {
            const Uncovered& u = rep.uncovered.front();
            throw VerificationError(std::string(info(alg).label) + " left " +
                                    std::to_string(rep.uncovered.size()) +
                                    " point(s) uncovered on " + instance + " trial " +
                                    std::to_string(t) + "; first is #" +
                                    std::to_string(u.index) + " at squared distance " +
                                    compact(u.min_dist_sq));
          }
        }
        BenchRecord& r = records[task];
        r.algorithm = std::string(info(alg).name);
        r.instance = instance;
        r.n = pts.size();
        r.cover_size = run.cover.size();
        r.wall_time_s = run.seconds;
        r.seed = config.generator ? config.generator->seed + t : 0;
        r.trial = t;
      } catch (...) {
        const std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, std::min(config.jobs, n_tasks));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < jobs; ++k) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  BenchResult result;
  result.records = std::move(records);
  for (std::size_t a = 0; a < n_alg; ++a) {
    BenchSummary s;
    s.algorithm = std::string(info(config.algorithms[a]).name);
    s.instance = instance;
    s.seed = config.generator ? config.generator->seed : 0;
    double size_sum = 0.0;
    double time_sum = 0.0;
    for (std::size_t t = 0; t < config.trials; ++t) {
      const BenchRecord& r = result.records[a * config.trials + t];
      size_sum += static_cast<double>(r.cover_size);
      time_sum += r.wall_time_s;
      s.n = r.n;
    }
    s.mean_cover_size = size_sum / static_cast<double>(config.trials);
    s.mean_wall_time_s = time_sum / static_cast<double>(config.trials);
    result.summaries.push_back(std::move(s));
  }
  return result;
}

}  // namespace udc
