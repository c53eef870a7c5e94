#include <cmath>
#include <random>

#include "doctest.h"
#include "walsh/hardy_norms.hpp"
#include "walsh/operators.hpp"
#include "walsh/walsh_transform.hpp"

using namespace walsh;

namespace {

DyadicFunction character(index_t n, int N) {
  DyadicFunction f(N);
  for (point_t x = 0; x < (point_t{1} << N); ++x)
    f.values[x] = walsh_eval(n, x, N);
  return f;
}

DyadicFunction random_function(int N, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  DyadicFunction f(N);
  for (double& v : f.values) v = dist(rng);
  return f;
}

double max_diff(const DyadicFunction& a, const DyadicFunction& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::fabs(a.values[i] - b.values[i]));
  return m;
}

}  // namespace

TEST_CASE("partial sums truncate the spectrum") {
  const int N = 4;
  DyadicFunction f = character(3, N);
  for (std::size_t x = 0; x < f.size(); ++x)
    f.values[x] += 2.0 * walsh_eval(5, x, N);
  CHECK(max_diff(partial_sum(f, 4), character(3, N)) <= 1e-13);
  CHECK(max_diff(partial_sum(f, 5), character(3, N)) <= 1e-13);
  DyadicFunction all = partial_sum(f, 6);
  CHECK(max_diff(all, f) <= 1e-13);
  DyadicFunction none = partial_sum(f, 0);
  for (double v : none.values) CHECK(v == 0.0);
  CHECK(max_diff(partial_sum(f, 100), f) == 0.0);
}

TEST_CASE("Fejer mean of a single character") {
  const int N = 4;
  DyadicFunction w3 = character(3, N);
  DyadicFunction s = fejer_mean(w3, 4);
  for (std::size_t x = 0; x < s.size(); ++x)
    CHECK(s.values[x] == doctest::Approx(0.25 * w3.values[x]).epsilon(1e-14));
  // sigma_n 1 = 1
  DyadicFunction one(N, 1.0);
  CHECK(max_diff(fejer_mean(one, 7), one) <= 1e-13);
}

TEST_CASE("conditional expectation averages level cells") {
  DyadicFunction f = random_function(4, 3);
  DyadicFunction e2 = condexp(f, 2);
  for (point_t r = 0; r < 4; ++r) {
    double sum = 0.0;
    for (point_t t = 0; t < 4; ++t) sum += f.values[r + 4 * t];
    for (point_t t = 0; t < 4; ++t)
      CHECK(e2.values[r + 4 * t] == doctest::Approx(sum / 4.0).epsilon(1e-14));
  }
  CHECK(max_diff(condexp(f, 4), f) == 0.0);
  DyadicFunction e0 = condexp(f, 0);
  for (double v : e0.values)
    CHECK(v == doctest::Approx(f.integral()).epsilon(1e-14));
  // E_n f = S_{2^n} f
  CHECK(max_diff(condexp(f, 2), partial_sum(f, 4)) <= 1e-13);
}

TEST_CASE("martingale maximal function") {
  const int N = 4;
  DyadicFunction w3 = character(3, N);
  DyadicFunction star = maximal_pow2(w3);
  for (double v : star.values) CHECK(v == 1.0);

  DyadicFunction f = random_function(5, 9);
  DyadicFunction fast = maximal_pow2(f);
  OperatorConfig cfg = OperatorConfig::custom_set({1, 2, 4, 8, 16, 32});
  DyadicFunction slow = maximal(f, cfg, OperatorKind::partial_sum);
  CHECK(max_diff(fast, slow) <= 1e-12);
}

TEST_CASE("translation") {
  DyadicFunction f = random_function(5, 21);
  DyadicFunction g = translate(f, 13);
  for (point_t x = 0; x < (point_t{1} << 5); ++x)
    CHECK(g.values[x] == f.values[x ^ 13]);
  CHECK(max_diff(translate(g, 13), f) == 0.0);
}

TEST_CASE("modulus of continuity") {
  DyadicFunction f = random_function(5, 33);
  DyadicFunction g = condexp(f, 3);
  for (std::size_t i = 0; i < f.size(); ++i) g.values[i] = f.values[i] - g.values[i];
  CHECK(modulus_continuity(f, 3, 2.0, Space::Lp) ==
        doctest::Approx(lp_norm(g, 2.0)).epsilon(1e-13));
  CHECK(modulus_continuity(f, 5, 2.0, Space::Lp) == 0.0);
  CHECK(modulus_continuity(f, 9, 2.0, Space::Lp) == 0.0);
  CHECK(modulus_continuity(f, 3, 2.0, Space::Hp) ==
        doctest::Approx(hp_norm(g, 2.0)).epsilon(1e-13));
}

TEST_CASE("translation modulus of a character") {
  const int N = 2;
  DyadicFunction w1 = character(1, N);
  // shifting by any h with h_0 = 1 flips the sign, giving ||2 w_1||_2 = 2
  CHECK(translation_modulus(w1, 0, 2.0) == doctest::Approx(2.0).epsilon(1e-14));
  // h in I_1 leaves the first coordinate alone
  CHECK(translation_modulus(w1, 1, 2.0) == 0.0);
}

TEST_CASE("named index families") {
  OperatorConfig pow2 = OperatorConfig::named("pow2", 2, 5);
  REQUIRE(pow2.indices.size() == 4);
  CHECK(pow2.indices[0] == 4);
  CHECK(pow2.indices[3] == 32);
  OperatorConfig plus1 = OperatorConfig::named("pow2_plus1", 2, 4);
  CHECK(plus1.indices[0] == 5);
  CHECK(plus1.indices[2] == 17);
  OperatorConfig half = OperatorConfig::named("pow2_plus_half", 2, 3);
  CHECK(half.indices[0] == 6);
  CHECK(half.indices[1] == 12);
  CHECK_THROWS_AS(OperatorConfig::named("nope", 1, 2), std::invalid_argument);
}
