#include "walsh/simd.hpp"

// TODO: NEON variants when an arm64 build target shows up.

namespace walsh::simd {

bool avx2_compiled_in() {
#ifdef WALSH_HAVE_AVX2_TU
  return true;
#else
  return false;
#endif
}

#ifndef WALSH_HAVE_AVX2_TU
const Ops& avx2_ops() { return scalar_ops(); }
#endif

bool avx2_active() {
#ifdef WALSH_HAVE_AVX2_TU
  static const bool active = __builtin_cpu_supports("avx2");
  return active;
#else
  return false;
#endif
}

const Ops& ops() {
  static const Ops& chosen = avx2_active() ? avx2_ops() : scalar_ops();
  return chosen;
}

}  // namespace walsh::simd
