#include <cmath>
#include <random>

#include "doctest.h"
#include "walsh/hardy_norms.hpp"
#include "walsh/kernels.hpp"
#include "walsh/walsh_transform.hpp"

using namespace walsh;

namespace {

DyadicFunction random_function(int N, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  DyadicFunction f(N);
  for (double& v : f.values) v = dist(rng);
  return f;
}

}  // namespace

TEST_CASE("norms of constants") {
  DyadicFunction f(6, -2.5);
  for (double p : {0.5, 1.0, 2.0, 3.0}) CHECK(lp_norm(f, p) == doctest::Approx(2.5));
  CHECK(sup_norm(f) == 2.5);
  CHECK(weak_lp_norm(f, 1.0) == 2.5);
}

TEST_CASE("half-exponent quasi-norm of pow2 Dirichlet kernels") {
  for (int k = 0; k <= 6; ++k) {
    DyadicFunction d = dirichlet(index_t{1} << k, 6);
    CHECK(lp_norm(d, 0.5) == doctest::Approx(std::ldexp(1.0, -k)).epsilon(1e-13));
    CHECK(weak_lp_norm(d, 1.0) == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("weak quasi-norm is exact for a three-level step function") {
  // values 4 on one cell, 2 on four cells, 1 on the remaining eleven of 16
  DyadicFunction f(4);
  f.values[0] = 4.0;
  for (int i = 1; i <= 4; ++i) f.values[i] = 2.0;
  for (int i = 5; i < 16; ++i) f.values[i] = 1.0;
  // sup_v v mu(|f| >= v): 4/16, 2*(5/16), 1*1 -> 1
  CHECK(weak_lp_norm(f, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(weak_lp_norm(f, 1.0) <= lp_norm(f, 1.0));
}

TEST_CASE("weak quasi-norm below the strong one") {
  for (int i = 0; i < 20; ++i) {
    DyadicFunction f = random_function(7, 50 + i);
    for (double p : {0.5, 1.0, 2.0})
      CHECK(weak_lp_norm(f, p) <= lp_norm(f, p) * (1.0 + 1e-12));
  }
}

TEST_CASE("Hardy quasi-norm via the maximal function") {
  const int N = 4;
  DyadicFunction w3(N);
  for (point_t x = 0; x < 16; ++x) w3.values[x] = walsh_eval(3, x, N);
  for (double p : {0.5, 1.0, 2.0})
    CHECK(hp_norm(w3, p) == doctest::Approx(1.0).epsilon(1e-14));
  for (int i = 0; i < 10; ++i) {
    DyadicFunction f = random_function(6, 70 + i);
    for (double p : {0.5, 1.0})
      CHECK(lp_norm(f, p) <= hp_norm(f, p) * (1.0 + 1e-12));
  }
}

TEST_CASE("exponent monotonicity on a probability space") {
  for (int i = 0; i < 10; ++i) {
    DyadicFunction f = random_function(6, 90 + i);
    double n_half = lp_norm(f, 0.5);
    double n_one = lp_norm(f, 1.0);
    double n_two = lp_norm(f, 2.0);
    CHECK(n_half <= n_one * (1.0 + 1e-12));
    CHECK(n_one <= n_two * (1.0 + 1e-12));
    CHECK(n_two <= sup_norm(f) * (1.0 + 1e-12));
  }
}

TEST_CASE("two-level difference atom") {
  AtomSpec spec;
  spec.p = 0.5;
  spec.haar_alpha = 5;
  DyadicFunction a = make_atom(spec, 4);
  // alpha = 5 sits in block m = 2: value 2^{m(1/p-1)} 2^m = 16 on I_3,
  // -16 on I_3 + e_2
  CHECK(a.values[0] == 16.0);
  CHECK(a.values[4] == -16.0);
  CHECK(a.values[8] == 16.0);
  CHECK(a.values[1] == 0.0);
  CHECK(a.values[2] == 0.0);
  CHECK(a.integral() == 0.0);
  CHECK(sup_norm(a) == 16.0);  // = 2^{m/p}
  CHECK(atom_check(a, 0.5, IntervalSpec::at_zero(2)).ok());
  CHECK(hp_norm(a, 0.5) == doctest::Approx(1.0).epsilon(1e-13));

  spec.base_point = 2;
  DyadicFunction b = make_atom(spec, 4);
  CHECK(b.values[2] == 16.0);
  CHECK(b.values[6] == -16.0);
  CHECK(atom_check(b, 0.5, IntervalSpec::at_point(2, 2)).ok());
}

TEST_CASE("explicit payload atom") {
  AtomSpec spec;
  spec.p = 1.0;
  spec.support_level = 2;
  spec.explicit_values = {1.0, -1.0, 2.0, -2.0};
  DyadicFunction a = make_atom(spec, 4);
  CHECK(a.values[0] == 1.0);
  CHECK(a.values[4] == -1.0);
  CHECK(a.values[8] == 2.0);
  CHECK(a.values[12] == -2.0);
  CHECK(a.values[1] == 0.0);
  CHECK(atom_check(a, 1.0, IntervalSpec::at_zero(2)).ok());
  spec.explicit_values = {1.0, 1.0};
  CHECK_THROWS(make_atom(spec, 4));
}

TEST_CASE("random atoms satisfy the three atom properties") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> pd(0.3, 1.5);
  for (int i = 0; i < 50; ++i) {
    double p = pd(rng);
    int M = static_cast<int>(rng() % 6);
    point_t base = rng() & 63;
    DyadicFunction a = make_random_atom(p, M, base, 6, rng);
    AtomCheckResult chk = atom_check(a, p, IntervalSpec::at_point(M, base));
    CHECK(chk.support_ok);
    CHECK(chk.mean_ok);
    CHECK(chk.sup_ok);
  }
}

TEST_CASE("atom check flags violations") {
  DyadicFunction f(4, 1.0);  // constant, not mean zero on its support
  AtomCheckResult chk = atom_check(f, 1.0, IntervalSpec::at_zero(0));
  CHECK(chk.support_ok);
  CHECK(!chk.mean_ok);
  DyadicFunction g(4);
  g.values[0] = 1.0;
  g.values[1] = -1.0;
  AtomCheckResult chk2 = atom_check(g, 1.0, IntervalSpec::at_zero(4));
  CHECK(!chk2.support_ok);  // support claim too small for cell 1
}
