#pragma once

#include <cstddef>

namespace walsh::simd {

// Hot loops behind a function-pointer table so the AVX2 translation unit can
// be swapped in at runtime. Scalar versions are the reference; the AVX2 ones
// must match them in the equivalence tests.
struct Ops {
  const char* name;
  // In-place unnormalized Walsh-Hadamard butterfly, n a power of two.
  void (*fwht)(double* a, std::size_t n);
  // sum_i |a[i]|^p with fast paths for p = 0.5, 1, 2.
  double (*abs_pow_sum)(const double* a, std::size_t n, double p);
  // dst[i] = max(dst[i], |src[i]|)
  void (*abs_max_update)(double* dst, const double* src, std::size_t n);
  // dst[i] += c * src[i]
  void (*scaled_add)(double* dst, const double* src, double c, std::size_t n);
};

const Ops& scalar_ops();
const Ops& avx2_ops();  // valid only if avx2_compiled_in()

bool avx2_compiled_in();
bool avx2_active();

// Best implementation for this machine, chosen once at startup.
const Ops& ops();

}  // namespace walsh::simd
