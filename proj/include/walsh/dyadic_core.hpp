#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "walsh/types.hpp"

namespace walsh {

// Positions of the highest and lowest set bit. n = 0 is rejected everywhere
// an expansion is required; these two are the building blocks.
int top_bit(index_t n);   // |n|
int low_bit(index_t n);   // <n>
int bit_gap(index_t n);   // d(n) = |n| - <n>

// V(n) = n_0 + sum_{k>=1} |n_k - n_{k-1}|, the number of 0/1 transitions in
// the bit sequence of n padded with zeros on both ends.
int variation(index_t n);

// Number of maximal runs of consecutive set bits.
int run_count(index_t n);

struct Run {
  int l = 0;  // lowest bit of the run
  int m = 0;  // highest bit of the run
};

// Binary run structure of an index plus the derived stats.
struct BlockDecomposition {
  index_t n = 0;
  int abs = 0;        // |n|
  int low = 0;        // <n>
  int d = 0;          // |n| - <n>
  int variation = 0;  // V(n)
  std::vector<Run> runs;                 // ascending, gap >= 2 between runs
  std::vector<index_t> prefix_values;    // entry i = sum of set bits below the i-th set bit (ascending)
  bool in_A02 = false;

  index_t reconstruct() const;
};

BlockDecomposition index_stats(index_t n);

// Set bit positions of n, ascending.
std::vector<int> set_bits(index_t n);

// Membership in A_{0,2}: bits 0 and 2 set, bit 1 clear, every other set bit
// above position 2.
bool in_A02(index_t n);

// Coordinatewise mod-2 sum of two points of the group, range-checked at
// resolution N.
point_t group_add(point_t x, point_t y, int N);

// The point e_k with coordinate k set and all others zero.
inline point_t e_point(int k) { return point_t{1} << k; }

struct IntervalSpec {
  enum class Kind { I_n_at_zero, I_n_at_point, I_n_shift_ek, I_n_shift_ek_el };
  Kind kind = Kind::I_n_at_zero;
  int n = 0;          // level
  int k = 0, l = 0;   // shift bit positions for the e_k / e_k + e_l kinds
  point_t point_bits = 0;

  static IntervalSpec at_zero(int n);
  static IntervalSpec at_point(int n, point_t x);
  static IntervalSpec shift_ek(int n, int k);
  static IntervalSpec shift_ek_el(int n, int k, int l);

  point_t base_point() const;
};

// Indicator of the dyadic interval I_n(base) at resolution N, values 0/1,
// total measure 2^{-n}.
DyadicFunction interval_indicator(const IntervalSpec& spec, int N);

// True if point x lies in the interval (first spec.n coordinates agree with
// the base point).
bool interval_contains(const IntervalSpec& spec, point_t x);

// Disjoint cover of the complement of I_M:
//   I_{l+1}(e_k + e_l) for 0 <= k < l <= M-1, and I_M(e_k) for 0 <= k < M.
std::vector<IntervalSpec> complement_cover(int M);

}  // namespace walsh
