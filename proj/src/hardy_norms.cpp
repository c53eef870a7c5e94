#include "walsh/hardy_norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "walsh/operators.hpp"
#include "walsh/simd.hpp"

namespace walsh {

double lp_pow(const DyadicFunction& f, double p) {
  if (p <= 0.0) throw std::invalid_argument("lp exponent must be positive");
  return simd::ops().abs_pow_sum(f.values.data(), f.size(), p) /
         static_cast<double>(f.size());
}

double lp_norm(const DyadicFunction& f, double p) {
  return std::pow(lp_pow(f, p), 1.0 / p);
}

double sup_norm(const DyadicFunction& f) {
  double m = 0.0;
  for (double v : f.values) m = std::max(m, std::fabs(v));
  return m;
}

double weak_lp_norm(const DyadicFunction& f, double p) {
  if (p <= 0.0) throw std::invalid_argument("lp exponent must be positive");
  std::vector<double> vals;
  vals.reserve(f.size());
  for (double v : f.values)
    if (v != 0.0) vals.push_back(std::fabs(v));
  if (vals.empty()) return 0.0;
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  // For a step function the sup over levels is attained at a realized value:
  // mu(|f| >= v) jumps exactly there. Scan distinct values once.
  double total = static_cast<double>(f.size());
  double best = 0.0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i + 1 < vals.size() && vals[i + 1] == vals[i]) continue;
    double mu = static_cast<double>(i + 1) / total;
    best = std::max(best, vals[i] * std::pow(mu, 1.0 / p));
  }
  return best;
}

double hp_norm(const DyadicFunction& f, double p) {
  return lp_norm(maximal_pow2(f), p);
}

DyadicFunction make_atom(const AtomSpec& spec, int N) {
  if (spec.p <= 0.0) throw std::invalid_argument("atom exponent must be positive");
  if (spec.haar_alpha) {
    index_t alpha = *spec.haar_alpha;
    if (alpha == 0) throw std::invalid_argument("haar atom index must be >= 1");
    int m = top_bit(alpha);
    if (m + 1 > N)
      throw std::invalid_argument("haar atom block does not fit the resolution");
    DyadicFunction a(N);
    double v = std::pow(2.0, m * (1.0 / spec.p - 1.0)) * std::ldexp(1.0, m);
    std::size_t step = std::size_t{1} << (m + 1);
    for (std::size_t x = 0; x < a.size(); x += step) {
      a.values[x] = v;
      a.values[x + (step >> 1)] = -v;
    }
    if (spec.base_point != 0) return translate(a, spec.base_point);
    return a;
  }
  if (!spec.explicit_values.empty()) {
    int M = spec.support_level;
    if (M < 0 || M > N) throw std::invalid_argument("atom support level out of range");
    std::size_t count = std::size_t{1} << (N - M);
    if (spec.explicit_values.size() != count)
      throw std::invalid_argument("explicit atom payload size mismatch");
    DyadicFunction a(N);
    point_t base_low = spec.base_point & ((point_t{1} << M) - 1);
    std::size_t step = std::size_t{1} << M;
    for (std::size_t t = 0; t < count; ++t)
      a.values[base_low + t * step] = spec.explicit_values[t];
    return a;
  }
  throw std::invalid_argument("atom spec needs haar_alpha or explicit_values");
}

DyadicFunction make_random_atom(double p, int support_level, point_t base_point,
                                int N, std::mt19937_64& rng) {
  if (support_level < 0 || support_level >= N)
    throw std::invalid_argument("random atom needs 0 <= support level < N");
  std::size_t count = std::size_t{1} << (N - support_level);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> vals(count);
  double maxabs = 0.0;
  while (maxabs < 1e-3) {
    double mean = 0.0;
    for (double& v : vals) {
      v = dist(rng);
      mean += v;
    }
    mean /= static_cast<double>(count);
    maxabs = 0.0;
    for (double& v : vals) {
      v -= mean;
      maxabs = std::max(maxabs, std::fabs(v));
    }
  }
  double scale = std::pow(2.0, support_level / p) / maxabs;
  for (double& v : vals) v *= scale;
  AtomSpec spec;
  spec.p = p;
  spec.support_level = support_level;
  spec.base_point = base_point;
  spec.explicit_values = std::move(vals);
  return make_atom(spec, N);
}

AtomCheckResult atom_check(const DyadicFunction& a, double p,
                           const IntervalSpec& claimed_support) {
  AtomCheckResult r;
  r.sup_value = sup_norm(a);
  r.sup_bound = std::pow(2.0, claimed_support.n / p);
  double tol = 1e-11 * std::max(1.0, r.sup_value);
  r.support_ok = true;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (!interval_contains(claimed_support, x) && std::fabs(a.values[x]) > tol) {
      r.support_ok = false;
      break;
    }
  }
  r.mean_abs = std::fabs(a.integral());
  r.mean_ok = r.mean_abs <= tol;
  r.sup_ok = r.sup_value <= r.sup_bound * (1.0 + 1e-12);
  return r;
}

}  // namespace walsh
