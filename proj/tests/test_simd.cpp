#include <cmath>
#include <cstring>
#include <random>
#include <vector>

#include "doctest.h"
#include "walsh/simd.hpp"

using namespace walsh;

namespace {

std::vector<double> random_values(std::size_t n, std::uint64_t seed, bool integers) {
  std::mt19937_64 rng(seed);
  std::vector<double> v(n);
  if (integers) {
    std::uniform_int_distribution<int> d(-9, 9);
    for (double& x : v) x = d(rng);
  } else {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (double& x : v) x = d(rng);
  }
  return v;
}

}  // namespace

TEST_CASE("dispatch table is consistent") {
  CHECK(simd::scalar_ops().name != nullptr);
  if (simd::avx2_active()) CHECK(simd::avx2_compiled_in());
  CHECK(simd::ops().fwht != nullptr);
}

TEST_CASE("butterflies agree bit for bit on integer input") {
  if (!simd::avx2_active()) return;
  for (std::size_t n : {std::size_t{1}, std::size_t{8}, std::size_t{256},
                        std::size_t{4096}}) {
    std::vector<double> a = random_values(n, 17 + n, true);
    std::vector<double> b = a;
    simd::scalar_ops().fwht(a.data(), n);
    simd::avx2_ops().fwht(b.data(), n);
    CHECK(std::memcmp(a.data(), b.data(), n * sizeof(double)) == 0);
  }
}

TEST_CASE("power sums agree across implementations") {
  if (!simd::avx2_active()) return;
  std::vector<double> v = random_values(4096, 23, false);
  for (double p : {0.5, 1.0, 2.0, 1.7}) {
    double s = simd::scalar_ops().abs_pow_sum(v.data(), v.size(), p);
    double a = simd::avx2_ops().abs_pow_sum(v.data(), v.size(), p);
    CHECK(a == doctest::Approx(s).epsilon(1e-12));
  }
}

TEST_CASE("running max agrees across implementations") {
  if (!simd::avx2_active()) return;
  std::vector<double> dst_s = random_values(1024, 5, false);
  std::vector<double> dst_a = dst_s;
  std::vector<double> src = random_values(1024, 6, false);
  simd::scalar_ops().abs_max_update(dst_s.data(), src.data(), src.size());
  simd::avx2_ops().abs_max_update(dst_a.data(), src.data(), src.size());
  for (std::size_t i = 0; i < src.size(); ++i) CHECK(dst_s[i] == dst_a[i]);
}

TEST_CASE("scaled accumulate agrees across implementations") {
  if (!simd::avx2_active()) return;
  std::vector<double> dst_s = random_values(1000, 7, false);
  std::vector<double> dst_a = dst_s;
  std::vector<double> src = random_values(1000, 8, false);
  simd::scalar_ops().scaled_add(dst_s.data(), src.data(), 0.37, src.size());
  simd::avx2_ops().scaled_add(dst_a.data(), src.data(), 0.37, src.size());
  for (std::size_t i = 0; i < src.size(); ++i)
    CHECK(dst_a[i] == doctest::Approx(dst_s[i]).epsilon(1e-14));
}

TEST_CASE("reference values for the scalar reductions") {
  std::vector<double> v = {3.0, -4.0, 0.0, 1.0};
  CHECK(simd::scalar_ops().abs_pow_sum(v.data(), 4, 1.0) == 8.0);
  CHECK(simd::scalar_ops().abs_pow_sum(v.data(), 4, 2.0) == 26.0);
  CHECK(simd::scalar_ops().abs_pow_sum(v.data(), 4, 0.5) ==
        doctest::Approx(std::sqrt(3.0) + 2.0 + 1.0).epsilon(1e-15));
  std::vector<double> dst = {1.0, 1.0, 1.0, 5.0};
  simd::scalar_ops().abs_max_update(dst.data(), v.data(), 4);
  CHECK(dst[0] == 3.0);
  CHECK(dst[1] == 4.0);
  CHECK(dst[2] == 1.0);
  CHECK(dst[3] == 5.0);
}
