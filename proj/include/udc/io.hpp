#pragma once

// Pointset readers, cover/point writers, benchmark CSV and SVG output.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "udc/geom.hpp"

namespace udc {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  /// 1-based line number, 0 when the error is not tied to one line.
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// One point per nonempty line as "x y"; lines starting with '#' are comments.
std::vector<Point> read_xy(std::istream& in);

/// Minimal TSPLIB reader: NODE_COORD_SECTION rows "index x y" until EOF or an
/// "EOF" line. DIMENSION, when present, must match the row count.
std::vector<Point> read_tsplib(std::istream& in);

/// TSPLIB if the stream contains a NODE_COORD_SECTION line, else plain xy.
std::vector<Point> read_points(std::istream& in);

/// Writes "x y" lines with round-trip precision; read_xy() restores the input.
void write_xy(std::span<const Point> points, std::ostream& out);

struct BenchRecord {
  std::string algorithm;
  std::string instance;
  std::size_t n = 0;
  std::size_t cover_size = 0;
  double wall_time_s = 0.0;
  std::uint64_t seed = 0;
  std::uint64_t trial = 0;
};

/// Mean over the trials of one (algorithm, instance) group.
struct BenchSummary {
  std::string algorithm;
  std::string instance;
  std::size_t n = 0;
  double mean_cover_size = 0.0;
  double mean_wall_time_s = 0.0;
  std::uint64_t seed = 0;
};

inline constexpr const char* kCsvHeader = "algorithm,instance,n,cover_size,wall_time_s,seed,trial";

/// Header plus one row per record; times with 6 decimals.
void write_csv(std::span<const BenchRecord> records, std::ostream& out);

/// Same, followed by one row per summary with trial field "mean".
void write_csv(std::span<const BenchRecord> records, std::span<const BenchSummary> summaries,
               std::ostream& out);

/// Reads rows written by write_csv(); "mean" rows are skipped.
std::vector<BenchRecord> read_csv(std::istream& in);

struct SvgOptions {
  /// Dot radius in plane units.
  double dot_radius = 0.06;
  /// Rendered width in pixels; height follows the aspect ratio.
  double width_px = 800.0;
  std::string disk_fill = "#3b82f6";
  double disk_opacity = 0.25;
  std::string dot_fill = "#111827";
};

/// Points as dots (class "pt") and unit disks as translucent circles (class
/// "disk"). The y axis is flipped so the picture has mathematical
/// orientation; the viewBox encloses every point and disk plus a 1-unit
/// margin.
void write_svg(std::span<const Point> points, const Cover& cover, std::ostream& out,
               const SvgOptions& opts = {});

}  // namespace udc
