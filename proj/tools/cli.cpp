#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <vector>

#include "udc/bench.hpp"
#include "udc/gen.hpp"
#include "udc/io.hpp"
#include "udc/oracle.hpp"
#include "udc/registry.hpp"
#include "udc/simd.hpp"

namespace udc::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenFlags {
  std::string shape = "square";
  std::size_t n = 1000;
  std::optional<double> area;
  double r_outer = 1000.0;
  double r_inner = 500.0;
  std::uint64_t seed = 1;

  void attach(CLI::App& app) {
    app.add_option("--shape", shape, "square | disk | convex | annulus")
        ->check(CLI::IsMember({"square", "disk", "convex", "annulus"}));
    app.add_option("--n", n, "number of points");
    app.add_option("--area", area, "area of the square/disk region (default: n, i.e. density 1)");
    app.add_option("--router", r_outer, "annulus outer radius");
    app.add_option("--rinner", r_inner, "annulus inner radius");
    app.add_option("--seed", seed, "generator seed");
  }

  GenSpec spec() const {
    const double a = area.value_or(static_cast<double>(n));
    GenSpec s;
    s.n = n;
    s.seed = seed;
    if (shape == "square") {
      s.shape = SquareShape{a};
    } else if (shape == "disk") {
      s.shape = DiskShape{a};
    } else if (shape == "convex") {
      s.shape = ConvexShape{a};
    } else {
      s.shape = AnnulusShape{r_outer, r_inner};
    }
    return s;
  }
};

std::vector<Point> load_points(const std::string& path) {
  if (path == "-") return read_points(std::cin);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  auto pts = read_points(in);
  return pts;
}

template <typename Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  fn(f);
  f.flush();
  if (!f) throw std::runtime_error("failed writing " + path);
}

std::vector<Algorithm> parse_algorithms(const std::vector<std::string>& names) {
  std::vector<Algorithm> out;
  for (const std::string& list : names) {
    std::stringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (name.empty()) continue;
      if (name == "all") {
        for (const AlgorithmInfo& a : all_algorithms()) out.push_back(a.id);
        continue;
      }
      const auto alg = find_algorithm(name);
      if (!alg) throw UsageError("unknown algorithm: " + name);
      out.push_back(*alg);
    }
  }
  if (out.empty()) throw UsageError("no algorithm selected");
  return out;
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit disk cover algorithms: generate pointsets, cover, verify, benchmark"};
  app.require_subcommand(1);
  std::string isa;
  app.add_option("--simd", isa, "force kernel instruction set (scalar | avx2 | neon)")
      ->check(CLI::IsMember({"scalar", "avx2", "neon"}));

  // generate
  auto* gen_cmd = app.add_subcommand("generate", "write a synthetic pointset");
  GenFlags gen_flags;
  gen_flags.attach(*gen_cmd);
  std::string gen_out;
  gen_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");

  // cover
  auto* cover_cmd = app.add_subcommand("cover", "run one or all algorithms on a pointset");
  std::vector<std::string> cover_algs{"fastcover"};
  std::string cover_input;
  GenFlags cover_gen;
  bool cover_verify = false;
  double cover_eps = kDefaultVerifyEps;
  std::string cover_svg;
  std::string cover_csv;
  std::string cover_centers;
  std::optional<std::uint64_t> cover_shuffle;
  bool drop_last = false;
  cover_cmd->add_option("--algorithm", cover_algs, "algorithm name(s), comma separated, or all");
  cover_cmd->add_option("--input", cover_input, "xy or TSPLIB file ('-' for stdin)");
  cover_gen.attach(*cover_cmd);
  cover_cmd->add_flag("--verify", cover_verify, "check every cover; exit 4 if one is invalid");
  cover_cmd->add_option("--eps", cover_eps, "verifier radius tolerance");
  cover_cmd->add_option("--svg", cover_svg, "render the (last) cover as SVG");
  cover_cmd->add_option("--csv", cover_csv, "write one CSV record per algorithm");
  cover_cmd->add_option("--centers", cover_centers, "write the (last) cover's centers as xy");
  cover_cmd->add_option("--shuffle-seed", cover_shuffle, "shuffle the input order first");
  cover_cmd->add_flag("--drop-last", drop_last,
                      "remove every disk covering the last input point (test hook)")
      ->group("");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "repeat, verify and time algorithms; CSV output");
  std::vector<std::string> bench_algs{"all"};
  std::string bench_input;
  GenFlags bench_gen;
  std::size_t trials = 5;
  std::size_t jobs = 1;
  double bench_eps = kDefaultVerifyEps;
  std::string bench_csv;
  std::optional<std::uint64_t> bench_shuffle;
  bench_cmd->add_option("--algorithm", bench_algs, "algorithm name(s), comma separated, or all");
  bench_cmd->add_option("--input", bench_input, "fixed pointset instead of a generator");
  bench_gen.attach(*bench_cmd);
  bench_cmd->add_option("--trials", trials, "trials per algorithm (generator seed + trial)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--jobs", jobs, "parallel (algorithm, trial) workers")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--eps", bench_eps, "verifier radius tolerance");
  bench_cmd->add_option("--csv", bench_csv, "CSV output file (default stdout)");
  bench_cmd->add_option("--shuffle-seed", bench_shuffle, "shuffle each trial's input order");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check that a set of centers covers a pointset");
  std::string verify_input;
  std::string verify_cover_path;
  double verify_eps = kDefaultVerifyEps;
  verify_cmd->add_option("--input", verify_input, "pointset file")->required();
  verify_cmd->add_option("--cover", verify_cover_path, "xy file of disk centers")->required();
  verify_cmd->add_option("--eps", verify_eps, "verifier radius tolerance");

  // optimal
  auto* opt_cmd = app.add_subcommand("optimal", "exact minimum cover (at most 12 points)");
  std::string opt_input;
  std::string opt_svg;
  opt_cmd->add_option("--input", opt_input, "pointset file")->required();
  opt_cmd->add_option("--svg", opt_svg, "render the optimal cover as SVG");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!isa.empty()) {
      simd::set_active_isa(isa == "avx2" ? simd::Isa::avx2
                           : isa == "neon" ? simd::Isa::neon
                                           : simd::Isa::scalar);
    }

    if (gen_cmd->parsed()) {
      const auto pts = generate(gen_flags.spec());
      with_output(gen_out, out, [&](std::ostream& o) { write_xy(pts, o); });
      return kOk;
    }

    if (cover_cmd->parsed()) {
      const auto algs = parse_algorithms(cover_algs);
      std::vector<Point> pts;
      std::string instance;
      if (!cover_input.empty()) {
        pts = load_points(cover_input);
        instance = cover_input;
      } else {
        const GenSpec spec = cover_gen.spec();
        pts = generate(spec);
        instance = instance_name(spec);
      }
      validate_points(pts);
      if (cover_shuffle) seeded_shuffle(pts, *cover_shuffle);

      bool all_valid = true;
      std::vector<BenchRecord> records;
      Cover last;
      for (const Algorithm alg : algs) {
        TimedCover run = timed_solve(alg, pts);
        if (drop_last && !pts.empty()) {
          const Point victim = pts.back();
          const double r2 = (1.0 + cover_eps) * (1.0 + cover_eps);
          std::erase_if(run.cover.centers, [&](const Point& c) { return dist_sq(c, victim) <= r2; });
        }
        out << info(alg).label << " size=" << run.cover.size() << " time=" << seconds(run.seconds)
            << "s";
        if (cover_verify) {
          const VerifyReport rep = verify_cover(pts, run.cover, cover_eps);
          out << (rep.valid ? " verified" : " INVALID uncovered=" +
                                                std::to_string(rep.uncovered.size()));
          all_valid = all_valid && rep.valid;
        }
        out << '\n';
        records.push_back({std::string(info(alg).name), instance, pts.size(), run.cover.size(),
                           run.seconds, cover_gen.seed, 0});
        last = std::move(run.cover);
      }
      if (!cover_csv.empty()) {
        with_output(cover_csv, out, [&](std::ostream& o) { write_csv(records, o); });
      }
      if (!cover_centers.empty()) {
        with_output(cover_centers, out, [&](std::ostream& o) { write_xy(last.centers, o); });
      }
      if (!cover_svg.empty()) {
        with_output(cover_svg, out, [&](std::ostream& o) { write_svg(pts, last, o); });
      }
      return all_valid ? kOk : kVerifyFailed;
    }

    if (bench_cmd->parsed()) {
      BenchConfig cfg;
      cfg.algorithms = parse_algorithms(bench_algs);
      cfg.trials = trials;
      cfg.jobs = jobs;
      cfg.eps = bench_eps;
      cfg.shuffle_seed = bench_shuffle;
      if (!bench_input.empty()) {
        cfg.points = load_points(bench_input);
        validate_points(cfg.points);
        cfg.instance = bench_input;
      } else {
        cfg.generator = bench_gen.spec();
      }
      const BenchResult res = run_bench(cfg);
      with_output(bench_csv, out,
                  [&](std::ostream& o) { write_csv(res.records, res.summaries, o); });
      return kOk;
    }

    if (verify_cmd->parsed()) {
      const auto pts = load_points(verify_input);
      Cover cover{load_points(verify_cover_path)};
      const VerifyReport rep = verify_cover(pts, cover, verify_eps);
      out << (rep.valid ? "valid" : "invalid") << " points=" << pts.size()
          << " disks=" << rep.cover_size << " uncovered=" << rep.uncovered.size() << '\n';
      for (std::size_t k = 0; k < rep.uncovered.size() && k < 10; ++k) {
        out << "  point " << rep.uncovered[k].index << " min_dist_sq=" << rep.uncovered[k].min_dist_sq
            << '\n';
      }
      return rep.valid ? kOk : kVerifyFailed;
    }

    if (opt_cmd->parsed()) {
      const auto pts = load_points(opt_input);
      const OptResult opt = optimal_cover(pts);
      out << "optimal size=" << opt.size << '\n';
      write_xy(opt.centers.centers, out);
      if (!opt_svg.empty()) {
        with_output(opt_svg, out, [&](std::ostream& o) { write_svg(pts, opt.centers, o); });
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const VerificationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace udc::cli
