#include "walsh/counterexamples.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "walsh/dyadic_core.hpp"
#include "walsh/hardy_norms.hpp"
#include "walsh/kernels.hpp"
#include "walsh/simd.hpp"
#include "walsh/walsh_transform.hpp"

namespace walsh {

double Phi::value(double n) const {
  switch (family) {
    case Family::constant:
      return param;
    case Family::power:
      return std::pow(n, param);
    case Family::log_power:
      return std::pow(std::log(n + 2.0), param);
  }
  throw std::logic_error("unreachable");
}

std::string Phi::describe() const {
  switch (family) {
    case Family::constant:
      return format_double(param);
    case Family::power:
      return "n^" + format_double(param);
    case Family::log_power:
      return "log(n+2)^" + format_double(param);
  }
  throw std::logic_error("unreachable");
}

Phi Phi::constant() { return Phi{Family::constant, 1.0}; }

Phi Phi::power(double beta) {
  if (beta <= 0.0) throw std::invalid_argument("power growth needs beta > 0");
  return Phi{Family::power, beta};
}

Phi Phi::log_power(double gamma) {
  if (gamma <= 0.0) throw std::invalid_argument("log growth needs gamma > 0");
  return Phi{Family::log_power, gamma};
}

double LambdaSchedule::lambda(index_t alpha) const {
  if (alpha == 0) throw std::invalid_argument("schedule index must be >= 1");
  double a = static_cast<double>(alpha);
  double d = bit_gap(alpha);
  double v = variation(alpha);
  switch (kind) {
    case Kind::thm411b:
      return std::sqrt(phi.value(a)) / std::pow(2.0, d * (1.0 / p - 1.0) / 2.0);
    case Kind::thm412b:
      return std::sqrt(phi.value(a)) / std::sqrt(v);
    case Kind::thm422b:
      return std::pow(2.0, -(1.0 / p - 1.0) * d);
    case Kind::thm423b:
      return 1.0 / v;
    case Kind::thm511b:
      return std::sqrt(phi.value(a)) / v;
    case Kind::thm512b:
      return std::sqrt(phi.value(a)) / std::pow(2.0, d * (1.0 / p - 2.0) / 2.0);
    case Kind::thm521b:
      return 1.0 / (v * v);
    case Kind::thm522b:
      return std::pow(2.0, -(1.0 / p - 2.0) * d);
    case Kind::thm531b: {
      double block_end = std::ldexp(2.0, top_bit(alpha));
      return std::pow(phi.value(block_end), 1.0 / (2.0 * p)) /
             std::pow(2.0, top_bit(alpha) * (1.0 / p - 1.0));
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<index_t> LambdaSchedule::filter(const std::vector<index_t>& candidates) const {
  std::vector<index_t> out;
  int last_top = -1;
  for (index_t a : candidates) {
    if (a == 0) continue;
    if (top_bit(a) <= last_top) continue;  // blocks must strictly ascend
    bool ok = true;
    switch (kind) {
      case Kind::thm422b:
      case Kind::thm522b: {
        int dv = bit_gap(a);
        if (dv < 1)
          ok = false;
        else if (!out.empty() && dv < 2 * bit_gap(out.back()))
          ok = false;
        break;
      }
      case Kind::thm423b:
      case Kind::thm521b: {
        int v = variation(a);
        if (!out.empty() && v < variation(out.back()) * variation(out.back()))
          ok = false;
        break;
      }
      case Kind::thm512b:
        if (a < 3) ok = false;
        break;
      case Kind::thm531b:
        if (top_bit(a) < 2) ok = false;
        break;
      default:
        break;
    }
    if (ok) {
      out.push_back(a);
      last_top = top_bit(a);
    }
  }
  return out;
}

std::string LambdaSchedule::describe() const {
  std::string rule;
  switch (kind) {
    case Kind::thm411b: rule = "Phi^{1/2}(a)/2^{d(a)(1/p-1)/2}"; break;
    case Kind::thm412b: rule = "Phi^{1/2}(a)/V^{1/2}(a)"; break;
    case Kind::thm422b: rule = "2^{-(1/p-1)d(a)}"; break;
    case Kind::thm423b: rule = "1/V(a)"; break;
    case Kind::thm511b: rule = "Phi^{1/2}(a)/V(a)"; break;
    case Kind::thm512b: rule = "Phi^{1/2}(a)/2^{d(a)(1/p-2)/2}"; break;
    case Kind::thm521b: rule = "1/V^2(a)"; break;
    case Kind::thm522b: rule = "2^{-(1/p-2)d(a)}"; break;
    case Kind::thm531b: rule = "Phi^{1/2p}(2^{|a|+1})/2^{|a|(1/p-1)}"; break;
  }
  return rule + ", p=" + format_double(p) + ", Phi=" + phi.describe();
}

LambdaSchedule LambdaSchedule::parse(const std::string& kind_name, double p, Phi phi) {
  if (p <= 0.0) throw std::invalid_argument("schedule exponent must be positive");
  LambdaSchedule s;
  s.p = p;
  s.phi = phi;
  if (kind_name == "thm411b") s.kind = Kind::thm411b;
  else if (kind_name == "thm412b") s.kind = Kind::thm412b;
  else if (kind_name == "thm422b") s.kind = Kind::thm422b;
  else if (kind_name == "thm423b") s.kind = Kind::thm423b;
  else if (kind_name == "thm511b") s.kind = Kind::thm511b;
  else if (kind_name == "thm512b") s.kind = Kind::thm512b;
  else if (kind_name == "thm521b") s.kind = Kind::thm521b;
  else if (kind_name == "thm522b") s.kind = Kind::thm522b;
  else if (kind_name == "thm531b") s.kind = Kind::thm531b;
  else throw std::invalid_argument("unknown schedule kind: " + kind_name);
  return s;
}

namespace {

double block_scale(double lambda_k, double p, int m) {
  return lambda_k * std::pow(2.0, m * (1.0 / p - 1.0));
}

// Growth envelopes from the boundedness theorems, by operator and exponent.
double growth_rate(double p, OperatorKind kind, index_t n) {
  if (kind == OperatorKind::partial_sum) {
    if (p < 1.0) return std::pow(2.0, bit_gap(n) * (1.0 / p - 1.0));
    return static_cast<double>(variation(n));
  }
  if (p < 0.5) return std::pow(2.0, bit_gap(n) * (1.0 / p - 2.0));
  if (p == 0.5) {
    double v = variation(n);
    return v * v;
  }
  return 1.0;
}

double norm_of(const DyadicFunction& g, double p, NormKind norm) {
  switch (norm) {
    case NormKind::lp:
      return lp_norm(g, p);
    case NormKind::weak_lp:
      return weak_lp_norm(g, p);
    case NormKind::hp:
      return hp_norm(g, p);
  }
  throw std::logic_error("unreachable");
}

std::string norm_name(NormKind norm) {
  switch (norm) {
    case NormKind::lp: return "lp";
    case NormKind::weak_lp: return "weak_lp";
    case NormKind::hp: return "hp";
  }
  throw std::logic_error("unreachable");
}

std::string family_name(OperatorConfig::Family family) {
  switch (family) {
    case OperatorConfig::Family::pow2: return "pow2";
    case OperatorConfig::Family::pow2_plus1: return "pow2_plus1";
    case OperatorConfig::Family::pow2_plus_half: return "pow2_plus_half";
    case OperatorConfig::Family::custom: return "custom";
  }
  throw std::logic_error("unreachable");
}

std::string kind_name(OperatorKind kind) {
  return kind == OperatorKind::partial_sum ? "partial_sum" : "fejer";
}

std::vector<double> operator_norm_sweep(const DyadicFunction& f, index_t n_max,
                                        double p, NormKind norm, bool fejer_path) {
  if (n_max == 0) throw std::invalid_argument("sweep needs n_max >= 1");
  if (n_max > f.size())
    throw std::invalid_argument("sweep n_max exceeds the spectral range");
  SpectralVector c = analyze(f);
  std::size_t size = f.size();
  std::vector<double> s_vals(size, 0.0);
  std::vector<double> p_vals;
  if (fejer_path) p_vals.assign(size, 0.0);
  DyadicFunction g(f.resolution);
  std::vector<double> out;
  out.reserve(n_max);
  for (index_t m = 1; m <= n_max; ++m) {
    index_t j = m - 1;  // coefficient entering S_m
    double coef = c.coeffs[j];
    if (coef != 0.0) {
      for (std::size_t x = 0; x < size; ++x)
        s_vals[x] += (std::popcount(j & static_cast<index_t>(x)) & 1) ? -coef : coef;
    }
    const std::vector<double>& cur = fejer_path ? p_vals : s_vals;
    double scale = 1.0;
    if (fejer_path) {
      for (std::size_t x = 0; x < size; ++x) p_vals[x] += s_vals[x];
      scale = 1.0 / static_cast<double>(m);
    }
    double val;
    if (norm == NormKind::lp) {
      val = std::pow(simd::ops().abs_pow_sum(cur.data(), size, p) /
                         static_cast<double>(size),
                     1.0 / p);
    } else {
      std::copy(cur.begin(), cur.end(), g.values.begin());
      val = norm == NormKind::hp ? hp_norm(g, p) : weak_lp_norm(g, p);
    }
    out.push_back(val * scale);
  }
  return out;
}

}  // namespace

SpectralVector ExampleMartingale::expected_spectrum(int N) const {
  SpectralVector s(N);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    int m = top_bit(alphas[i]);
    if (m + 1 > N) continue;
    double c = block_scale(lambdas[i], p, m);
    for (index_t j = index_t{1} << m; j < (index_t{1} << (m + 1)); ++j)
      s.coeffs[j] = c;
  }
  return s;
}

DyadicFunction ExampleMartingale::expected_partial_sum(index_t j, int N) const {
  if (j > (index_t{1} << N))
    throw std::out_of_range("partial sum index exceeds resolution");
  DyadicFunction out(N);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    int m = top_bit(alphas[i]);
    index_t lo = index_t{1} << m;
    index_t hi = lo << 1;
    double c = block_scale(lambdas[i], p, m);
    if (j >= hi) {
      double v = c * std::ldexp(1.0, m);
      std::size_t step = hi;
      for (std::size_t x = 0; x < out.size(); x += step) {
        out.values[x] += v;
        out.values[x + lo] -= v;
      }
    } else if (j > lo) {
      DyadicFunction dj = dirichlet(j - lo, N, DirichletMethod::recursive);
      for (std::size_t x = 0; x < out.size(); ++x) {
        double sign = (x >> m) & 1 ? -1.0 : 1.0;
        out.values[x] += c * sign * dj.values[x];
      }
      break;
    } else {
      break;
    }
  }
  return out;
}

double ExampleMartingale::tail_sum(int n) const {
  double s = 0.0;
  for (std::size_t i = 0; i < alphas.size(); ++i)
    if (top_bit(alphas[i]) >= n) s += std::pow(std::fabs(lambdas[i]), p);
  return std::pow(s, 1.0 / p);
}

ExampleMartingale build_example_martingale(double p,
                                           const std::vector<index_t>& alphas,
                                           const LambdaSchedule& schedule,
                                           int N) {
  check_resolution(N);
  if (p <= 0.0) throw std::invalid_argument("martingale exponent must be positive");
  ExampleMartingale em;
  em.p = p;
  em.f = DyadicFunction(N);
  int last_top = -1;
  for (index_t a : alphas) {
    if (a == 0) throw std::invalid_argument("martingale block index must be >= 1");
    int m = top_bit(a);
    if (m <= last_top)
      throw std::invalid_argument("martingale blocks must strictly ascend");
    last_top = m;
    if (m + 1 > N) {
      ++em.truncated;
      continue;
    }
    double lam = schedule.lambda(a);
    em.alphas.push_back(a);
    em.lambdas.push_back(lam);
    double v = block_scale(lam, p, m) * std::ldexp(1.0, m);
    std::size_t step = std::size_t{1} << (m + 1);
    for (std::size_t x = 0; x < em.f.size(); x += step) {
      em.f.values[x] += v;
      em.f.values[x + (step >> 1)] -= v;
    }
  }
  em.spectrum = analyze(em.f);
  return em;
}

DyadicFunction halfnorm_atom(int m, int N) {
  if (m < 0 || m + 1 > N)
    throw std::invalid_argument("halfnorm atom needs 0 <= m < N");
  DyadicFunction f(N);
  double v = std::ldexp(1.0, 2 * m);
  std::size_t step = std::size_t{1} << (m + 1);
  for (std::size_t x = 0; x < f.size(); x += step) {
    f.values[x] = v;
    f.values[x + (step >> 1)] = -v;
  }
  return f;
}

ExperimentTable divergence_experiment(double p, const OperatorConfig& family,
                                      const LambdaSchedule& schedule,
                                      OperatorKind kind, NormKind norm, int N) {
  check_resolution(N);
  std::vector<index_t> alphas = schedule.filter(family.indices);
  ExampleMartingale em = build_example_martingale(p, alphas, schedule, N);
  ExperimentTable t;
  t.name = "divergence";
  t.columns = {"k", "m", "statistic", "rate"};
  t.metadata["p"] = format_double(p);
  t.metadata["N"] = std::to_string(N);
  t.metadata["schedule"] = schedule.describe();
  t.metadata["family"] = family_name(family.family);
  t.metadata["operator"] = kind_name(kind);
  t.metadata["norm"] = norm_name(norm);
  t.metadata["atoms"] = std::to_string(em.alphas.size());
  t.metadata["truncated"] = std::to_string(em.truncated);
  t.metadata["hp_norm_f"] = format_double(hp_norm(em.f, p));
  int k = 0;
  for (index_t m : family.indices) {
    if (m == 0) throw std::invalid_argument("operator index must be >= 1");
    DyadicFunction g =
        kind == OperatorKind::fejer ? fejer_mean(em.f, m) : partial_sum(em.f, m);
    double damp = schedule.phi.value(static_cast<double>(m));
    t.add_row({static_cast<double>(k), static_cast<double>(m),
               norm_of(g, p, norm) / damp, growth_rate(p, kind, m) / damp});
    ++k;
  }
  return t;
}

ExperimentTable upper_bound_experiment(double p, OperatorKind kind, int N,
                                       int samples, std::uint64_t seed) {
  check_resolution(N);
  if (samples < 1) throw std::invalid_argument("need at least one sample");
  if (N < 2) throw std::invalid_argument("upper bound sweep needs N >= 2");
  std::mt19937_64 rng(seed);
  index_t n_max = index_t{1} << (N - 1);
  std::vector<double> worst(n_max, 0.0);
  std::uniform_int_distribution<int> lev(0, N - 1);
  std::uniform_int_distribution<point_t> base(0, (point_t{1} << N) - 1);
  for (int s = 0; s < samples; ++s) {
    DyadicFunction f = make_random_atom(p, lev(rng), base(rng), N, rng);
    double fh = hp_norm(f, p);
    std::vector<double> sweep =
        kind == OperatorKind::fejer ? fejer_norm_sweep(f, n_max, p, NormKind::hp)
                                    : partial_sum_norm_sweep(f, n_max, p, NormKind::hp);
    for (index_t n = 1; n <= n_max; ++n) {
      double ratio = sweep[n - 1] / (growth_rate(p, kind, n) * fh);
      worst[n - 1] = std::max(worst[n - 1], ratio);
    }
  }
  ExperimentTable t;
  t.name = "upper_bound";
  t.columns = {"n", "d", "variation", "rate", "max_ratio"};
  t.metadata["p"] = format_double(p);
  t.metadata["N"] = std::to_string(N);
  t.metadata["operator"] = kind_name(kind);
  t.metadata["samples"] = std::to_string(samples);
  t.metadata["seed"] = std::to_string(seed);
  for (index_t n = 1; n <= n_max; ++n)
    t.add_row({static_cast<double>(n), static_cast<double>(bit_gap(n)),
               static_cast<double>(variation(n)), growth_rate(p, kind, n),
               worst[n - 1]});
  return t;
}

ExperimentTable norm_convergence_experiment(double p, const OperatorConfig& family,
                                            const LambdaSchedule& schedule,
                                            OperatorKind kind, int N) {
  check_resolution(N);
  std::vector<index_t> alphas = schedule.filter(family.indices);
  ExampleMartingale em = build_example_martingale(p, alphas, schedule, N);
  ExperimentTable t;
  t.name = "norm_convergence";
  t.columns = {"k", "m", "error", "bound"};
  t.metadata["p"] = format_double(p);
  t.metadata["N"] = std::to_string(N);
  t.metadata["schedule"] = schedule.describe();
  t.metadata["family"] = family_name(family.family);
  t.metadata["operator"] = kind_name(kind);
  t.metadata["truncated"] = std::to_string(em.truncated);
  int k = 0;
  for (index_t m : family.indices) {
    if (m == 0) throw std::invalid_argument("operator index must be >= 1");
    DyadicFunction g =
        kind == OperatorKind::fejer ? fejer_mean(em.f, m) : partial_sum(em.f, m);
    for (std::size_t x = 0; x < g.size(); ++x) g.values[x] -= em.f.values[x];
    double omega = modulus_continuity(em.f, top_bit(m), p, Space::Hp);
    t.add_row({static_cast<double>(k), static_cast<double>(m), hp_norm(g, p),
               growth_rate(p, kind, m) * omega});
    ++k;
  }
  return t;
}

ExperimentTable strong_sum_experiment(double p, OperatorKind kind,
                                      const StrongSumSource& source,
                                      index_t n_max, int N) {
  check_resolution(N);
  ExperimentTable t;
  if (source.kind == StrongSumSource::Kind::halfnorm_atoms) {
    if (source.m_min < 0 || source.m_max < source.m_min)
      throw std::invalid_argument("halfnorm block range invalid");
    t.name = "strong_sum_blocks";
    t.columns = {"m", "block_average", "log_m"};
    t.metadata["p"] = format_double(p);
    t.metadata["statistic"] =
        "2^{-(m+1)} sum_{k=2^m+1}^{2^{m+1}-1} ||sigma_k f_m||_p^p";
    for (int m = source.m_min; m <= source.m_max; ++m) {
      if (m + 1 > N)
        throw std::invalid_argument("halfnorm block exceeds the resolution");
      // sigma_k f_m for k < 2^{m+1} is exactly resolved at level m+1, so the
      // sweep runs on the small grid regardless of N.
      DyadicFunction fm = halfnorm_atom(m, m + 1);
      index_t hi = index_t{1} << (m + 1);
      std::vector<double> sweep = fejer_norm_sweep(fm, hi - 1, p, NormKind::lp);
      double sum = 0.0;
      for (index_t kk = (index_t{1} << m) + 1; kk < hi; ++kk)
        sum += std::pow(sweep[kk - 1], p);
      t.add_row({static_cast<double>(m), sum / static_cast<double>(hi),
                 std::log(static_cast<double>(m))});
    }
    return t;
  }
  const DyadicFunction& f = source.f;
  if (f.resolution != N)
    throw std::invalid_argument("source resolution does not match N");
  if (n_max < 2 || n_max > f.size())
    throw std::invalid_argument("strong sum needs 2 <= n_max <= 2^N");
  bool fejer_path = kind == OperatorKind::fejer;
  std::vector<double> sweep =
      fejer_path ? fejer_norm_sweep(f, n_max, p, NormKind::hp)
                 : partial_sum_norm_sweep(f, n_max, p, NormKind::hp);
  double fh = hp_norm(f, p);
  double ref = fejer_path ? std::pow(fh, p) : fh;
  double beta = fejer_path ? 0.5 + p : p;
  t.name = "strong_sum";
  t.columns = {"n", "strong_sum", "ratio"};
  t.metadata["p"] = format_double(p);
  t.metadata["N"] = std::to_string(N);
  t.metadata["operator"] = kind_name(kind);
  t.metadata["hp_norm_f"] = format_double(fh);
  t.metadata["statistic"] =
      fejer_path ? "log(n)^{-(1/2+p)} sum_{m<=n} ||sigma_m f||_hp^p / m^{2-2p}"
                 : "log(n)^{-p} sum_{k<=n} ||S_k f||_hp / k^{2-p}";
  double acc = 0.0;
  for (index_t m = 1; m <= n_max; ++m) {
    double dm = static_cast<double>(m);
    acc += fejer_path ? std::pow(sweep[m - 1], p) / std::pow(dm, 2.0 - 2.0 * p)
                      : sweep[m - 1] / std::pow(dm, 2.0 - p);
    bool is_pow2 = (m & (m - 1)) == 0;
    if (m >= 2 && (is_pow2 || m == n_max)) {
      double stat = acc / std::pow(std::log(dm), beta);
      t.add_row({dm, stat, stat / ref});
    }
  }
  return t;
}

std::vector<double> fejer_norm_sweep(const DyadicFunction& f, index_t n_max,
                                     double p, NormKind norm) {
  return operator_norm_sweep(f, n_max, p, norm, true);
}

std::vector<double> partial_sum_norm_sweep(const DyadicFunction& f, index_t n_max,
                                           double p, NormKind norm) {
  return operator_norm_sweep(f, n_max, p, norm, false);
}

}  // namespace walsh
