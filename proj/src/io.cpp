#include "udc/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <iterator>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

namespace udc {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t k = 0;
  while (k < s.size()) {
    while (k < s.size() && (s[k] == ' ' || s[k] == '\t')) ++k;
    const std::size_t start = k;
    while (k < s.size() && s[k] != ' ' && s[k] != '\t') ++k;
    if (k > start) out.push_back(s.substr(start, k - start));
  }
  return out;
}

std::optional<double> parse_double(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

Point parse_xy_pair(std::string_view a, std::string_view b, std::size_t line) {
  const auto x = parse_double(a);
  const auto y = parse_double(b);
  if (!x || !y) throw ParseError(line, "expected two finite numbers");
  if (std::fabs(*x) > kMaxCoordinate || std::fabs(*y) > kMaxCoordinate) {
    throw ParseError(line, "coordinate outside the supported range");
  }
  return {*x, *y};
}

std::string upper(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        fields.back() += '"';
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

std::vector<Point> read_xy(std::istream& in) {
  std::vector<Point> pts;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = trim(raw);
    if (s.empty() || s.front() == '#') continue;
    const auto tok = split_ws(s);
    if (tok.size() != 2) throw ParseError(line, "expected two numbers");
    pts.push_back(parse_xy_pair(tok[0], tok[1], line));
  }
  return pts;
}

std::vector<Point> read_tsplib(std::istream& in) {
  std::vector<Point> pts;
  std::optional<std::uint64_t> dimension;
  bool in_coords = false;
  bool saw_section = false;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = trim(raw);
    if (s.empty()) continue;
    if (upper(s) == "EOF") break;
    if (!in_coords) {
      const std::string key = upper(trim(s.substr(0, s.find(':'))));
      if (key == "NODE_COORD_SECTION") {
        in_coords = saw_section = true;
      } else if (key == "DIMENSION") {
        const auto colon = s.find(':');
        if (colon == std::string_view::npos) throw ParseError(line, "DIMENSION without value");
        dimension = parse_uint(trim(s.substr(colon + 1)));
        if (!dimension) throw ParseError(line, "invalid DIMENSION");
      }
      continue;
    }
    const auto tok = split_ws(s);
    if (tok.size() != 3) {
      // Another section ends the coordinates.
      if (!tok.empty() && !parse_double(tok[0])) break;
      throw ParseError(line, "expected 'index x y'");
    }
    pts.push_back(parse_xy_pair(tok[1], tok[2], line));
  }
  if (!saw_section) throw ParseError(0, "missing NODE_COORD_SECTION");
  if (dimension && *dimension != pts.size()) {
    throw ParseError(0, "DIMENSION " + std::to_string(*dimension) + " does not match " +
                            std::to_string(pts.size()) + " coordinate rows");
  }
  return pts;
}

std::vector<Point> read_points(std::istream& in) {
  const std::string content(std::istreambuf_iterator<char>(in), {});
  std::string marker = content;
  std::transform(marker.begin(), marker.end(), marker.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  std::istringstream body(content);
  if (marker.find("NODE_COORD_SECTION") != std::string::npos) return read_tsplib(body);
  return read_xy(body);
}

void write_xy(std::span<const Point> points, std::ostream& out) {
  char buf[96];
  for (const Point& p : points) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", p.x, p.y);
    out << buf;
  }
  if (!out) throw std::runtime_error("failed to write points");
}

void write_csv(std::span<const BenchRecord> records, std::ostream& out) {
  write_csv(records, {}, out);
}

void write_csv(std::span<const BenchRecord> records, std::span<const BenchSummary> summaries,
               std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    out << csv_field(r.algorithm) << ',' << csv_field(r.instance) << ',' << r.n << ','
        << r.cover_size << ',' << fmt("%.6f", r.wall_time_s) << ',' << r.seed << ',' << r.trial
        << '\n';
  }
  for (const BenchSummary& s : summaries) {
    out << csv_field(s.algorithm) << ',' << csv_field(s.instance) << ',' << s.n << ','
        << fmt("%.2f", s.mean_cover_size) << ',' << fmt("%.6f", s.mean_wall_time_s) << ','
        << s.seed << ",mean\n";
  }
  if (!out) throw std::runtime_error("failed to write CSV");
}

std::vector<BenchRecord> read_csv(std::istream& in) {
  std::vector<BenchRecord> out;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (line == 1) {
      if (raw != kCsvHeader) throw ParseError(line, "unexpected CSV header");
      continue;
    }
    if (raw.empty()) continue;
    const auto f = split_csv(raw);
    if (f.size() != 7) throw ParseError(line, "expected 7 fields");
    if (f[6] == "mean") continue;
    BenchRecord r;
    r.algorithm = f[0];
    r.instance = f[1];
    const auto n = parse_uint(f[2]);
    const auto size = parse_uint(f[3]);
    const auto t = parse_double(f[4]);
    const auto seed = parse_uint(f[5]);
    const auto trial = parse_uint(f[6]);
    if (!n || !size || !t || !seed || !trial) throw ParseError(line, "malformed record");
    r.n = *n;
    r.cover_size = *size;
    r.wall_time_s = *t;
    r.seed = *seed;
    r.trial = *trial;
    out.push_back(std::move(r));
  }
  return out;
}

void write_svg(std::span<const Point> points, const Cover& cover, std::ostream& out,
               const SvgOptions& opts) {
  double minx = std::numeric_limits<double>::infinity();
  double miny = minx;
  double maxx = -minx;
  double maxy = -minx;
  auto grow = [&](double x0, double y0, double x1, double y1) {
    minx = std::min(minx, x0);
    miny = std::min(miny, y0);
    maxx = std::max(maxx, x1);
    maxy = std::max(maxy, y1);
  };
  for (const Point& p : points) grow(p.x, p.y, p.x, p.y);
  for (const Point& c : cover.centers) grow(c.x - 1.0, c.y - 1.0, c.x + 1.0, c.y + 1.0);
  if (minx > maxx) minx = miny = maxx = maxy = 0.0;
  constexpr double kMargin = 1.0;
  minx -= kMargin;
  miny -= kMargin;
  maxx += kMargin;
  maxy += kMargin;
  const double w = maxx - minx;
  const double h = maxy - miny;
  const double height_px = opts.width_px * h / w;

  auto num = [](double v) { return fmt("%.10g", v); };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(opts.width_px)
      << "\" height=\"" << num(height_px) << "\" viewBox=\"" << num(minx) << ' ' << num(-maxy)
      << ' ' << num(w) << ' ' << num(h) << "\">\n";
  out << "<g class=\"disks\" fill=\"" << opts.disk_fill << "\" fill-opacity=\""
      << num(opts.disk_opacity) << "\" stroke=\"" << opts.disk_fill << "\" stroke-width=\""
      << num(0.02) << "\">\n";
  for (const Point& c : cover.centers) {
    out << "<circle class=\"disk\" cx=\"" << num(c.x) << "\" cy=\"" << num(-c.y)
        << "\" r=\"1\"/>\n";
  }
  out << "</g>\n<g class=\"points\" fill=\"" << opts.dot_fill << "\">\n";
  for (const Point& p : points) {
    out << "<circle class=\"pt\" cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y) << "\" r=\""
        << num(opts.dot_radius) << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  if (!out) throw std::runtime_error("failed to write SVG");
}

}  // namespace udc
