#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "walsh/kernels.hpp"
#include "walsh/table.hpp"

using namespace walsh;

TEST_CASE("D_3 on the four level-2 cells") {
  std::vector<double> want = {3.0, 1.0, 1.0, -1.0};
  for (DirichletMethod m : {DirichletMethod::direct, DirichletMethod::lemma1,
                            DirichletMethod::recursive}) {
    DyadicFunction d = dirichlet(3, 2, m);
    REQUIRE(d.size() == 4);
    for (std::size_t x = 0; x < 4; ++x) CHECK(d.values[x] == want[x]);
  }
}

TEST_CASE("D_0 vanishes and D_1 is constant") {
  DyadicFunction d0 = dirichlet(0, 3);
  for (double v : d0.values) CHECK(v == 0.0);
  DyadicFunction d1 = dirichlet(1, 3);
  for (double v : d1.values) CHECK(v == 1.0);
}

TEST_CASE("D_{2^m} is 2^m on I_m and zero off it") {
  for (int m = 0; m <= 4; ++m) {
    DyadicFunction d = dirichlet(index_t{1} << m, 5);
    for (std::size_t x = 0; x < d.size(); ++x)
      CHECK(d.values[x] == (x % (1u << m) == 0 ? double(1 << m) : 0.0));
  }
}

TEST_CASE("D_5 values at resolution 3") {
  // D_5 = D_4 + w_4 D_1
  std::vector<double> want = {5, 1, 1, 1, 3, -1, -1, -1};
  DyadicFunction d = dirichlet(5, 3, DirichletMethod::recursive);
  for (std::size_t x = 0; x < 8; ++x) CHECK(d.values[x] == want[x]);
}

TEST_CASE("reflection identity at small sizes") {
  for (int t : {1, 2, 3}) {
    index_t pw = index_t{1} << t;
    for (index_t j = 1; j < pw; ++j) {
      DyadicFunction lhs = dirichlet(pw - j, 4, DirichletMethod::direct);
      DyadicFunction rhs = dirichlet_reflection(t, j, 4);
      for (std::size_t x = 0; x < lhs.size(); ++x)
        CHECK(lhs.values[x] == rhs.values[x]);
    }
  }
}

TEST_CASE("3 K_3 equals D_1 + D_2 + D_3") {
  std::vector<double> want = {6.0, 2.0, 4.0, 0.0};
  for (FejerMethod m : {FejerMethod::direct, FejerMethod::weighted,
                        FejerMethod::lemma3}) {
    DyadicFunction k = fejer_kernel(3, 2, m);
    for (std::size_t x = 0; x < 4; ++x)
      CHECK(3.0 * k.values[x] == doctest::Approx(want[x]).epsilon(1e-12));
  }
}

TEST_CASE("closed form for K_{2^m}") {
  for (int m = 0; m <= 4; ++m) {
    DyadicFunction closed = fejer_pow2_closed(m, 6);
    DyadicFunction direct = fejer_kernel(index_t{1} << m, 6, FejerMethod::direct);
    for (std::size_t x = 0; x < closed.size(); ++x)
      CHECK(closed.values[x] == doctest::Approx(direct.values[x]).epsilon(1e-13));
  }
  // spot values: K_{2^m} = (2^m+1)/2 at zero, 2^{t-1} when x mod 2^m = 2^t
  DyadicFunction k8 = fejer_pow2_closed(3, 4);
  CHECK(k8.values[0] == 4.5);
  CHECK(k8.values[1] == 0.5);
  CHECK(k8.values[2] == 1.0);
  CHECK(k8.values[4] == 2.0);
  CHECK(k8.values[3] == 0.0);
  CHECK(k8.values[8] == 4.5);
}

TEST_CASE("Lebesgue constants") {
  CHECK(lebesgue_constant(3) == 1.5);
  CHECK(lebesgue_constant_closed(3) == 1.5);
  for (int m = 0; m <= 8; ++m)
    CHECK(lebesgue_constant_closed(index_t{1} << m) == 1.0);
  for (index_t n = 1; n <= 64; ++n)
    CHECK(lebesgue_constant(n) ==
          doctest::Approx(lebesgue_constant_closed(n)).epsilon(1e-13));
}

TEST_CASE("averaged variation statistic table") {
  ExperimentTable t = lebesgue_cesaro(64);
  REQUIRE(t.rows.size() == 3);
  CHECK(t.at(0, "n") == 16.0);
  CHECK(t.at(1, "n") == 32.0);
  CHECK(t.at(2, "n") == 64.0);
  // sum of V(k) for k <= 16 is 42 by hand
  double want = 42.0 / (16.0 * std::log(16.0));
  CHECK(t.at(0, "variation_statistic") == doctest::Approx(want).epsilon(1e-13));
  CHECK(t.metadata.count("reference_constant") == 1);
}

TEST_CASE("Fejer kernel mass") {
  CHECK(fejer_l1(1) == 1.0);
  CHECK(fejer_l1(5) == doctest::Approx(fejer_translated_mass(5, 3, 0, 0)).epsilon(1e-14));
  for (index_t n : {index_t{2}, index_t{7}, index_t{21}})
    CHECK(fejer_l1(n) > 0.0);
}

TEST_CASE("run lower bound margin for n = 5") {
  // runs of 5 are {0} and {2}; only l = 2 counts, with bound 2^4/16 = 1.
  // 5 K_5 = 3 on the two level-3 cells shifted by e_1 + e_2.
  CHECK(fejer_run_lower_bound_margin(5, 3) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(fejer_run_lower_bound_margin(5, 6) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("majorant bounds n K_n within the sweep constant") {
  // The pointwise bound holds up to an absolute constant. Sweeping n <= 64
  // at N = 8 measures a max ratio of 3.3940, attained at n = 63 where the
  // single long run keeps V(n) small. Frozen with 5 percent headroom.
  double worst = 0.0;
  for (index_t n = 1; n <= 64; ++n)
    worst = std::max(worst, fejer_majorant_max_ratio(n, 8));
  CHECK(worst <= 3.5637);
  // The majorant is within a constant of sharp as well: the ratio never
  // collapses, so the denominator is not wildly oversized.
  CHECK(worst >= 1.0);
}

TEST_CASE("kernel bound report") {
  auto reports = kernel_bounds_report({3, 5, 13}, 8);
  REQUIRE(reports.size() == 3);
  for (const KernelReport& r : reports) {
    CHECK(r.lower_bound_ok);
    CHECK(r.upper_bound_ok);
    CHECK(r.max_ratio <= 1.0);
  }
  CHECK(reports[0].l1_norm == 1.5);
  CHECK(reports[0].variation == 2);
  CHECK(reports[2].variation == 4);
}
