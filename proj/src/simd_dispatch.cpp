#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

#include "udc/simd.hpp"

namespace udc::simd {
namespace {

constexpr Kernels kScalar{&scalar::nearest, &scalar::within_mask, &scalar::cell_keys};
#if defined(UDC_HAVE_AVX2)
constexpr Kernels kAvx2{&avx2::nearest, &avx2::within_mask, &avx2::cell_keys};
#endif
#if defined(UDC_HAVE_NEON)
constexpr Kernels kNeon{&neon::nearest, &neon::within_mask, &neon::cell_keys};
#endif

Isa initial_isa() {
  if (const char* env = std::getenv("UDC_SIMD"); env != nullptr && std::strcmp(env, "scalar") == 0) {
    return Isa::scalar;
  }
  return detected_isa();
}

std::atomic<Isa>& active_slot() {
  static std::atomic<Isa> slot{initial_isa()};
  return slot;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(UDC_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
    case Isa::neon:
#if defined(UDC_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa detected_isa() {
  if (isa_available(Isa::avx2)) return Isa::avx2;
  if (isa_available(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

Isa active_isa() { return active_slot().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("instruction set not available: " + std::string(isa_name(isa)));
  }
  active_slot().store(isa, std::memory_order_relaxed);
}

const Kernels& kernels_for(Isa isa) {
  switch (isa) {
#if defined(UDC_HAVE_AVX2)
    case Isa::avx2:
      return kAvx2;
#endif
#if defined(UDC_HAVE_NEON)
    case Isa::neon:
      return kNeon;
#endif
    default:
      return kScalar;
  }
}

}  // namespace udc::simd
