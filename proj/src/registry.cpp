#include "udc/registry.hpp"

#include <array>
#include <cctype>

#include "udc/classic.hpp"
#include "udc/fastcover.hpp"
#include "udc/sweep.hpp"

namespace udc {
namespace {

constexpr std::array<AlgorithmInfo, 9> kAlgorithms{{
    {Algorithm::g1991, "g1991", "G-1991", 8.0},
    {Algorithm::ccfm1997, "ccfm1997", "CCFM-1997", 7.0},
    {Algorithm::ll2014, "ll2014", "LL-2014", 25.0 / 6.0},
    {Algorithm::ll2014_1p, "ll2014-1p", "LL-2014-1P", 5.0},
    {Algorithm::blms2017, "blms2017", "BLMS-2017", 4.0},
    {Algorithm::dgt2018, "dgt2018", "DGT-2018", 5.0},
    {Algorithm::fastcover, "fastcover", "FastCover", 7.0},
    {Algorithm::fastcover_plus, "fastcover+", "FastCover+", 7.0},
    {Algorithm::fastcover_pp, "fastcover++", "FastCover++", 7.0},
}};

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (std::tolower(static_cast<unsigned char>(a[k])) !=
        std::tolower(static_cast<unsigned char>(b[k]))) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::span<const AlgorithmInfo> all_algorithms() { return kAlgorithms; }

const AlgorithmInfo& info(Algorithm a) { return kAlgorithms[static_cast<std::size_t>(a)]; }

std::optional<Algorithm> find_algorithm(std::string_view name) {
  for (const AlgorithmInfo& a : kAlgorithms) {
    if (iequals(name, a.name) || iequals(name, a.label)) return a.id;
  }
  return std::nullopt;
}

Cover solve(Algorithm a, std::span<const Point> points) {
  switch (a) {
    case Algorithm::g1991:
      return g1991(points);
    case Algorithm::ccfm1997:
      return ccfm1997(points);
    case Algorithm::ll2014:
      return ll2014(points, 6);
    case Algorithm::ll2014_1p:
      return ll2014(points, 1);
    case Algorithm::blms2017:
      return blms2017(points);
    case Algorithm::dgt2018:
      return dgt2018(points);
    case Algorithm::fastcover:
      return fast_cover(points);
    case Algorithm::fastcover_plus:
      return fast_cover_plus(points);
    case Algorithm::fastcover_pp:
      return fast_cover_pp(points);
  }
  return {};
}

}  // namespace udc
