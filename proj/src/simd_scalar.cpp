#include "walsh/simd.hpp"

#include <cmath>

namespace walsh::simd {

static void fwht_scalar(double* a, std::size_t n) {
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        double x = a[j];
        double y = a[j + h];
        a[j] = x + y;
        a[j + h] = x - y;
      }
    }
  }
}

static double abs_pow_sum_scalar(const double* a, std::size_t n, double p) {
  double s = 0.0;
  if (p == 1.0) {
    for (std::size_t i = 0; i < n; ++i) s += std::fabs(a[i]);
  } else if (p == 2.0) {
    for (std::size_t i = 0; i < n; ++i) s += a[i] * a[i];
  } else if (p == 0.5) {
    for (std::size_t i = 0; i < n; ++i) s += std::sqrt(std::fabs(a[i]));
  } else {
    for (std::size_t i = 0; i < n; ++i) s += std::pow(std::fabs(a[i]), p);
  }
  return s;
}

static void abs_max_update_scalar(double* dst, const double* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double v = std::fabs(src[i]);
    if (v > dst[i]) dst[i] = v;
  }
}

static void scaled_add_scalar(double* dst, const double* src, double c, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += c * src[i];
}

const Ops& scalar_ops() {
  static const Ops ops{"scalar", fwht_scalar, abs_pow_sum_scalar,
                       abs_max_update_scalar, scaled_add_scalar};
  return ops;
}

}  // namespace walsh::simd
