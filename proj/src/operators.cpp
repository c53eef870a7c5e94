#include "walsh/operators.hpp"

#include <cmath>
#include <stdexcept>

#include "walsh/hardy_norms.hpp"
#include "walsh/simd.hpp"
#include "walsh/walsh_transform.hpp"

namespace walsh {

OperatorConfig OperatorConfig::named(const std::string& name, int k_min, int k_max) {
  if (k_min < 0 || k_max < k_min)
    throw std::invalid_argument("operator family needs 0 <= k_min <= k_max");
  OperatorConfig cfg;
  if (name == "pow2") {
    cfg.family = Family::pow2;
    for (int k = k_min; k <= k_max; ++k) cfg.indices.push_back(index_t{1} << k);
  } else if (name == "pow2_plus1") {
    cfg.family = Family::pow2_plus1;
    for (int k = k_min; k <= k_max; ++k)
      cfg.indices.push_back((index_t{1} << k) + 1);
  } else if (name == "pow2_plus_half") {
    if (k_min < 1)
      throw std::invalid_argument("pow2_plus_half needs k_min >= 1");
    cfg.family = Family::pow2_plus_half;
    for (int k = k_min; k <= k_max; ++k)
      cfg.indices.push_back((index_t{1} << k) + (index_t{1} << (k - 1)));
  } else {
    throw std::invalid_argument("unknown operator family: " + name);
  }
  return cfg;
}

OperatorConfig OperatorConfig::custom_set(std::vector<index_t> idx) {
  OperatorConfig cfg;
  cfg.family = Family::custom;
  cfg.indices = std::move(idx);
  return cfg;
}

namespace {

// Spectral multiplier application shared by S_n and sigma_n.
DyadicFunction apply_multiplier(const SpectralVector& s, index_t n, bool fejer) {
  SpectralVector t = s;
  if (fejer) {
    double inv = 1.0 / static_cast<double>(n);
    for (index_t k = 0; k < t.size(); ++k)
      t.coeffs[k] *= k < n ? static_cast<double>(n - k) * inv : 0.0;
  } else {
    for (index_t k = n; k < t.size(); ++k) t.coeffs[k] = 0.0;
  }
  return synthesize(t);
}

}  // namespace

DyadicFunction partial_sum(const DyadicFunction& f, index_t n) {
  if (n == 0) return DyadicFunction(f.resolution);
  if (n >= f.size()) return f;
  return apply_multiplier(analyze(f), n, false);
}

DyadicFunction fejer_mean(const DyadicFunction& f, index_t n) {
  if (n == 0) throw std::invalid_argument("fejer_mean needs n >= 1");
  return apply_multiplier(analyze(f), n, true);
}

DyadicFunction condexp(const DyadicFunction& f, int n) {
  if (n < 0) throw std::invalid_argument("condexp level must be >= 0");
  int N = f.resolution;
  if (n >= N) return f;
  DyadicFunction out(N);
  std::size_t step = std::size_t{1} << n;
  std::size_t cells_per_class = f.size() >> n;
  double inv = 1.0 / static_cast<double>(cells_per_class);
  for (std::size_t r = 0; r < step; ++r) {
    double sum = 0.0;
    for (std::size_t x = r; x < f.size(); x += step) sum += f.values[x];
    double avg = sum * inv;
    for (std::size_t x = r; x < f.size(); x += step) out.values[x] = avg;
  }
  return out;
}

DyadicFunction maximal(const DyadicFunction& f, const OperatorConfig& cfg,
                       OperatorKind kind) {
  if (cfg.indices.empty())
    throw std::invalid_argument("maximal needs a nonempty index set");
  SpectralVector s = analyze(f);
  DyadicFunction out(f.resolution);
  for (index_t m : cfg.indices) {
    if (kind == OperatorKind::fejer && m == 0)
      throw std::invalid_argument("fejer index must be >= 1");
    DyadicFunction g = apply_multiplier(s, m, kind == OperatorKind::fejer);
    simd::ops().abs_max_update(out.values.data(), g.values.data(), out.size());
  }
  return out;
}

DyadicFunction maximal_pow2(const DyadicFunction& f) {
  int N = f.resolution;
  // Averaging pyramid downward: level k holds S_{2^k} f as one value per
  // level-k cell, cells keyed by the low k bits.
  std::vector<std::vector<double>> rep(static_cast<std::size_t>(N) + 1);
  rep[N] = f.values;
  for (int k = N; k-- > 0;) {
    std::size_t half = std::size_t{1} << k;
    rep[k].resize(half);
    const std::vector<double>& up = rep[k + 1];
    for (std::size_t c = 0; c < half; ++c)
      rep[k][c] = 0.5 * (up[c] + up[c + half]);
  }
  // Expand upward, carrying the running max of |S_{2^j} f| over j <= k.
  std::vector<double> best{std::fabs(rep[0][0])};
  for (int k = 1; k <= N; ++k) {
    std::size_t size = std::size_t{1} << k;
    std::size_t mask = (size >> 1) - 1;
    std::vector<double> next(size);
    for (std::size_t c = 0; c < size; ++c)
      next[c] = std::max(best[c & mask], std::fabs(rep[k][c]));
    best.swap(next);
  }
  DyadicFunction out(N);
  out.values = std::move(best);
  return out;
}

DyadicFunction translate(const DyadicFunction& f, point_t h) {
  if (h >= f.size())
    throw std::out_of_range("translation point exceeds resolution");
  DyadicFunction out(f.resolution);
  for (std::size_t x = 0; x < f.size(); ++x) out.values[x] = f.values[x ^ h];
  return out;
}

double modulus_continuity(const DyadicFunction& f, int n, double p, Space space) {
  if (n < 0) throw std::invalid_argument("modulus level must be >= 0");
  if (n >= f.resolution) return 0.0;
  DyadicFunction g = condexp(f, n);
  for (std::size_t x = 0; x < g.size(); ++x)
    g.values[x] = f.values[x] - g.values[x];
  return space == Space::Lp ? lp_norm(g, p) : hp_norm(g, p);
}

double translation_modulus(const DyadicFunction& f, int n, double p) {
  if (n < 0) throw std::invalid_argument("modulus level must be >= 0");
  int N = f.resolution;
  if (n >= N) return 0.0;
  std::size_t step = std::size_t{1} << n;
  DyadicFunction diff(N);
  double worst = 0.0;
  for (std::size_t h = 0; h < f.size(); h += step) {
    for (std::size_t x = 0; x < f.size(); ++x)
      diff.values[x] = f.values[x ^ h] - f.values[x];
    worst = std::max(worst, lp_norm(diff, p));
  }
  return worst;
}

}  // namespace walsh
