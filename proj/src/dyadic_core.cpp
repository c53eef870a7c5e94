#include "walsh/dyadic_core.hpp"

#include <bit>
#include <cstdlib>
#include <numeric>
#include <string>

namespace walsh {

int max_resolution() {
  static const int cap = [] {
    if (const char* env = std::getenv("WALSH_MAX_RESOLUTION")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 1 && v <= 26) return static_cast<int>(v);
    }
    return 20;
  }();
  return cap;
}

void check_resolution(int resolution) {
  if (resolution < 0 || resolution > max_resolution())
    throw resolution_error("resolution " + std::to_string(resolution) +
                           " outside [0, " + std::to_string(max_resolution()) + "]");
}

double DyadicFunction::integral() const {
  double s = std::accumulate(values.begin(), values.end(), 0.0);
  return s / static_cast<double>(values.size());
}

static void require_positive(index_t n) {
  if (n == 0) throw std::invalid_argument("index 0 has no binary expansion stats");
}

int top_bit(index_t n) {
  require_positive(n);
  return 63 - std::countl_zero(n);
}

int low_bit(index_t n) {
  require_positive(n);
  return std::countr_zero(n);
}

int bit_gap(index_t n) { return top_bit(n) - low_bit(n); }

int variation(index_t n) {
  require_positive(n);
  // Transition count of the padded bit sequence. n_0 contributes via the
  // shifted-in zero, the final fall via the vanished top bit.
  return std::popcount(n ^ (n << 1)) + ((n >> 63) & 1);
}

int run_count(index_t n) {
  require_positive(n);
  // A run ends at bit k when n_k = 1 and n_{k+1} = 0.
  return std::popcount(n & ~(n >> 1));
}

std::vector<int> set_bits(index_t n) {
  std::vector<int> bits;
  for (index_t v = n; v != 0; v &= v - 1) bits.push_back(std::countr_zero(v));
  return bits;
}

bool in_A02(index_t n) {
  return (n & 7) == 5 && n >= 5;
}

index_t BlockDecomposition::reconstruct() const {
  index_t v = 0;
  for (const Run& r : runs)
    for (int k = r.l; k <= r.m; ++k) v |= index_t{1} << k;
  return v;
}

BlockDecomposition index_stats(index_t n) {
  require_positive(n);
  BlockDecomposition b;
  b.n = n;
  b.abs = top_bit(n);
  b.low = low_bit(n);
  b.d = b.abs - b.low;
  b.variation = variation(n);
  b.in_A02 = in_A02(n);

  index_t v = n;
  while (v != 0) {
    int l = std::countr_zero(v);
    index_t rest = v >> l;
    int len = std::countr_zero(~rest);
    b.runs.push_back({l, l + len - 1});
    v &= ~(((index_t{1} << len) - 1) << l);
  }

  index_t prefix = 0;
  for (int bit : set_bits(n)) {
    b.prefix_values.push_back(prefix);
    prefix |= index_t{1} << bit;
  }
  return b;
}

point_t group_add(point_t x, point_t y, int N) {
  check_resolution(N);
  point_t lim = point_t{1} << N;
  if (x >= lim || y >= lim)
    throw std::out_of_range("point outside the resolution-" + std::to_string(N) + " group");
  return x ^ y;
}

IntervalSpec IntervalSpec::at_zero(int n) {
  IntervalSpec s;
  s.kind = Kind::I_n_at_zero;
  s.n = n;
  return s;
}

IntervalSpec IntervalSpec::at_point(int n, point_t x) {
  IntervalSpec s;
  s.kind = Kind::I_n_at_point;
  s.n = n;
  s.point_bits = x;
  return s;
}

IntervalSpec IntervalSpec::shift_ek(int n, int k) {
  if (!(k < n)) throw std::invalid_argument("I_n(e_k) needs k < n");
  IntervalSpec s;
  s.kind = Kind::I_n_shift_ek;
  s.n = n;
  s.k = k;
  return s;
}

IntervalSpec IntervalSpec::shift_ek_el(int n, int k, int l) {
  if (!(k < l && l <= n)) throw std::invalid_argument("I_n(e_k+e_l) needs k < l <= n");
  IntervalSpec s;
  s.kind = Kind::I_n_shift_ek_el;
  s.n = n;
  s.k = k;
  s.l = l;
  return s;
}

point_t IntervalSpec::base_point() const {
  switch (kind) {
    case Kind::I_n_at_zero: return 0;
    case Kind::I_n_at_point: return point_bits;
    case Kind::I_n_shift_ek: return e_point(k);
    case Kind::I_n_shift_ek_el: return e_point(k) ^ e_point(l);
  }
  return 0;
}

bool interval_contains(const IntervalSpec& spec, point_t x) {
  point_t mask = (spec.n >= 64) ? ~point_t{0} : ((point_t{1} << spec.n) - 1);
  return ((x ^ spec.base_point()) & mask) == 0;
}

DyadicFunction interval_indicator(const IntervalSpec& spec, int N) {
  check_resolution(N);
  if (spec.n > N)
    throw resolution_error("interval level exceeds resolution");
  DyadicFunction f(N);
  point_t mask = spec.n == 0 ? 0 : ((point_t{1} << spec.n) - 1);
  point_t base = spec.base_point() & mask;
  // Cells of I_n(base): low n bits fixed, the rest free.
  std::size_t step = std::size_t{1} << spec.n;
  for (std::size_t j = base; j < f.size(); j += step) f.values[j] = 1.0;
  return f;
}

std::vector<IntervalSpec> complement_cover(int M) {
  std::vector<IntervalSpec> cover;
  for (int k = 0; k + 1 <= M - 1; ++k)
    for (int l = k + 1; l <= M - 1; ++l)
      cover.push_back(IntervalSpec::shift_ek_el(l + 1, k, l));
  for (int k = 0; k <= M - 1; ++k)
    cover.push_back(IntervalSpec::at_point(M, e_point(k)));
  return cover;
}

}  // namespace walsh
