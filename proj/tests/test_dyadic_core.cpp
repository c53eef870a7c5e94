#include <random>

#include "doctest.h"
#include "walsh/dyadic_core.hpp"

using namespace walsh;

TEST_CASE("bit positions and gap") {
  CHECK(top_bit(1) == 0);
  CHECK(low_bit(1) == 0);
  CHECK(bit_gap(1) == 0);
  CHECK(top_bit(5) == 2);
  CHECK(low_bit(5) == 0);
  CHECK(bit_gap(5) == 2);
  CHECK(top_bit(12) == 3);
  CHECK(low_bit(12) == 2);
  CHECK(bit_gap(12) == 1);
  CHECK(top_bit(index_t{1} << 40) == 40);
  CHECK(low_bit((index_t{1} << 40) + 8) == 3);
}

TEST_CASE("variation equals twice the run count") {
  CHECK(variation(1) == 2);
  CHECK(variation(2) == 2);
  CHECK(variation(3) == 2);
  CHECK(variation(5) == 4);
  CHECK(variation(6) == 2);
  CHECK(variation(13) == 4);
  CHECK(variation(21) == 6);
  CHECK(variation((index_t{1} << 10) + 1) == 4);
  for (index_t n = 1; n <= 4096; ++n) CHECK(variation(n) == 2 * run_count(n));
}

TEST_CASE("run decomposition of 13") {
  BlockDecomposition st = index_stats(13);
  CHECK(st.abs == 3);
  CHECK(st.low == 0);
  CHECK(st.d == 3);
  CHECK(st.variation == 4);
  REQUIRE(st.runs.size() == 2);
  CHECK(st.runs[0].l == 0);
  CHECK(st.runs[0].m == 0);
  CHECK(st.runs[1].l == 2);
  CHECK(st.runs[1].m == 3);
  REQUIRE(st.prefix_values.size() == 3);
  CHECK(st.prefix_values[0] == 0);
  CHECK(st.prefix_values[1] == 1);
  CHECK(st.prefix_values[2] == 5);
  CHECK(st.reconstruct() == 13);
  CHECK(st.in_A02);
}

TEST_CASE("reconstruct round trip") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    index_t n = rng() >> (i % 40);
    if (n == 0) continue;
    CHECK(index_stats(n).reconstruct() == n);
  }
}

TEST_CASE("set bits ascending") {
  auto b = set_bits(13);
  REQUIRE(b.size() == 3);
  CHECK(b[0] == 0);
  CHECK(b[1] == 2);
  CHECK(b[2] == 3);
  CHECK(set_bits(0).empty());
}

TEST_CASE("membership in the bit-{0,2} set") {
  CHECK(in_A02(5));
  CHECK(in_A02(13));
  CHECK(in_A02(21));
  CHECK(in_A02(37));
  CHECK(!in_A02(1));
  CHECK(!in_A02(3));
  CHECK(!in_A02(4));
  CHECK(!in_A02(7));    // bit 1 set
  CHECK(!in_A02(15));
  CHECK(!in_A02(6));    // bit 0 clear
  // (n & 7) == 5 pins the three low bits, the rest is free: the count in
  // [2^j, 2^{j+1}) is 2^{j-3} for j >= 3
  for (int j = 3; j <= 10; ++j) {
    index_t count = 0;
    for (index_t n = index_t{1} << j; n < index_t{1} << (j + 1); ++n)
      if (in_A02(n)) ++count;
    CHECK(count == index_t{1} << (j - 3));
  }
}

TEST_CASE("group addition is coordinatewise mod 2") {
  CHECK(group_add(5, 3, 4) == 6);
  CHECK(group_add(0, 9, 4) == 9);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    point_t x = rng() & 0xffff;
    point_t y = rng() & 0xffff;
    CHECK(group_add(x, y, 16) == group_add(y, x, 16));
    CHECK(group_add(group_add(x, y, 16), y, 16) == x);
  }
  CHECK(e_point(3) == 8);
}

TEST_CASE("interval indicators") {
  DyadicFunction ind = interval_indicator(IntervalSpec::at_zero(2), 5);
  for (std::size_t x = 0; x < ind.size(); ++x)
    CHECK(ind.values[x] == (x % 4 == 0 ? 1.0 : 0.0));
  CHECK(ind.integral() == doctest::Approx(0.25).epsilon(1e-15));

  DyadicFunction at13 = interval_indicator(IntervalSpec::at_point(2, 13), 5);
  for (std::size_t x = 0; x < at13.size(); ++x)
    CHECK(at13.values[x] == (x % 4 == 13 % 4 ? 1.0 : 0.0));

  DyadicFunction sh = interval_indicator(IntervalSpec::shift_ek(3, 1), 5);
  for (std::size_t x = 0; x < sh.size(); ++x)
    CHECK(sh.values[x] == (x % 8 == 2 ? 1.0 : 0.0));

  DyadicFunction sh2 = interval_indicator(IntervalSpec::shift_ek_el(3, 0, 2), 5);
  for (std::size_t x = 0; x < sh2.size(); ++x)
    CHECK(sh2.values[x] == (x % 8 == 5 ? 1.0 : 0.0));
}

TEST_CASE("interval membership matches the indicator") {
  IntervalSpec spec = IntervalSpec::at_point(3, 21);
  DyadicFunction ind = interval_indicator(spec, 6);
  for (std::size_t x = 0; x < ind.size(); ++x)
    CHECK(interval_contains(spec, x) == (ind.values[x] == 1.0));
}

TEST_CASE("complement cover tiles everything outside I_M exactly once") {
  for (int M = 1; M <= 10; ++M) {
    auto cover = complement_cover(M);
    CHECK(cover.size() == static_cast<std::size_t>(M * (M - 1) / 2 + M));
    for (point_t x = 0; x < (point_t{1} << M); ++x) {
      int hits = 0;
      for (const IntervalSpec& piece : cover)
        if (interval_contains(piece, x)) ++hits;
      CHECK(hits == (x == 0 ? 0 : 1));
    }
  }
}
