#include "walsh/kernels.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "walsh/simd.hpp"
#include "walsh/walsh_transform.hpp"

namespace walsh {

namespace {

void require_index_range(index_t n, int N, bool allow_equal_pow2 = true) {
  check_resolution(N);
  if (n == 0) throw std::invalid_argument("kernel index must be positive");
  index_t lim = index_t{1} << N;
  if (n > lim || (!allow_equal_pow2 && n == lim))
    throw std::out_of_range("kernel index exceeds resolution");
}

// D_{2^m}: 2^m on I_m, 0 elsewhere.
DyadicFunction dirichlet_pow2(int m, int N) {
  DyadicFunction f(N);
  double v = std::ldexp(1.0, m);
  std::size_t step = std::size_t{1} << m;
  for (std::size_t x = 0; x < f.size(); x += step) f.values[x] = v;
  return f;
}

int sign_of(index_t n, point_t x) {
  return (std::popcount(n & x) & 1) ? -1 : 1;
}

}  // namespace

DyadicFunction dirichlet(index_t n, int N, DirichletMethod method) {
  if (n == 0) {
    check_resolution(N);
    return DyadicFunction(N);
  }
  require_index_range(n, N);
  switch (method) {
    case DirichletMethod::direct: {
      DyadicFunction f(N);
      for (std::size_t x = 0; x < f.size(); ++x) {
        double s = 0.0;
        for (index_t i = 0; i < n; ++i) s += sign_of(i, x);
        f.values[x] = s;
      }
      return f;
    }
    case DirichletMethod::lemma1: {
      // D_n = w_n sum_k n_k (D_{2^{k+1}} - D_{2^k})
      DyadicFunction f(N);
      for (int k : set_bits(n)) {
        double hi = std::ldexp(1.0, k + 1);
        double lo = std::ldexp(1.0, k);
        std::size_t step_hi = std::size_t{1} << (k + 1);
        std::size_t step_lo = std::size_t{1} << k;
        for (std::size_t x = 0; x < f.size(); x += step_hi) f.values[x] += hi;
        for (std::size_t x = 0; x < f.size(); x += step_lo) f.values[x] -= lo;
      }
      for (std::size_t x = 0; x < f.size(); ++x)
        if (sign_of(n, x) < 0) f.values[x] = -f.values[x];
      return f;
    }
    case DirichletMethod::recursive: {
      // D_{j + 2^m} = D_{2^m} + w_{2^m} D_j with 2^m the top bit, applied
      // bottom-up over the set bits of n.
      std::vector<int> bits = set_bits(n);  // ascending
      DyadicFunction f = dirichlet_pow2(bits[0], N);
      for (std::size_t bi = 1; bi < bits.size(); ++bi) {
        int m = bits[bi];
        index_t top = index_t{1} << m;
        for (std::size_t x = 0; x < f.size(); ++x)
          f.values[x] *= sign_of(top, x);
        double v = std::ldexp(1.0, m);
        std::size_t step = std::size_t{1} << m;
        for (std::size_t x = 0; x < f.size(); x += step) f.values[x] += v;
      }
      return f;
    }
  }
  throw std::logic_error("unreachable");
}

DyadicFunction dirichlet_reflection(int n, index_t j, int N) {
  if (n < 0 || (index_t{1} << n) > (index_t{1} << N))
    throw std::out_of_range("dirichlet_reflection level out of range");
  if (j >= (index_t{1} << n))
    throw std::out_of_range("dirichlet_reflection needs j < 2^n");
  DyadicFunction f = dirichlet_pow2(n, N);
  if (j == 0) return f;
  DyadicFunction dj = dirichlet(j, N, DirichletMethod::recursive);
  index_t psi = (index_t{1} << n) - 1;
  for (std::size_t x = 0; x < f.size(); ++x)
    f.values[x] -= sign_of(psi, x) * dj.values[x];
  return f;
}

DyadicFunction fejer_pow2_closed(int m, int N) {
  if (m > N) throw std::out_of_range("fejer_pow2_closed level exceeds resolution");
  DyadicFunction f(N);
  index_t mod = index_t{1} << m;
  double on_in = (std::ldexp(1.0, m) + 1.0) / 2.0;
  for (std::size_t x = 0; x < f.size(); ++x) {
    index_t r = x & (mod - 1);
    if (r == 0)
      f.values[x] = on_in;
    else if ((r & (r - 1)) == 0)
      f.values[x] = std::ldexp(1.0, std::countr_zero(r) - 1);
  }
  return f;
}

DyadicFunction fejer_kernel(index_t n, int N, FejerMethod method) {
  require_index_range(n, N);
  switch (method) {
    case FejerMethod::direct: {
      // Running D_k, literal sum of D_1..D_n.
      DyadicFunction acc(N);
      std::vector<double> d(acc.size(), 0.0);
      for (index_t k = 1; k <= n; ++k) {
        for (std::size_t x = 0; x < acc.size(); ++x) {
          d[x] += sign_of(k - 1, x);
          acc.values[x] += d[x];
        }
      }
      double inv = 1.0 / static_cast<double>(n);
      for (double& v : acc.values) v *= inv;
      return acc;
    }
    case FejerMethod::weighted: {
      SpectralVector s(N);
      double inv = 1.0 / static_cast<double>(n);
      for (index_t k = 0; k < n && k < s.size(); ++k)
        s.coeffs[k] = static_cast<double>(n - k) * inv;
      return synthesize(s);
    }
    case FejerMethod::lemma3: {
      // n K_n = sum_r w_{mask_r} 2^{b_r} K_{2^{b_r}}
      //       + sum_{t>=2} w_{mask_t} n^{(t)} D_{2^{b_t}},
      // mask = the set bits of n above the current one.
      BlockDecomposition st = index_stats(n);
      std::vector<int> bits = set_bits(n);
      DyadicFunction out(N);
      for (std::size_t r = 0; r < bits.size(); ++r) {
        index_t mask = 0;
        for (std::size_t j = r + 1; j < bits.size(); ++j) mask |= index_t{1} << bits[j];
        DyadicFunction kb = fejer_pow2_closed(bits[r], N);
        double scale = std::ldexp(1.0, bits[r]);
        for (std::size_t x = 0; x < out.size(); ++x)
          out.values[x] += sign_of(mask, x) * scale * kb.values[x];
        if (r >= 1) {
          double pv = static_cast<double>(st.prefix_values[r]);
          std::size_t step = std::size_t{1} << bits[r];
          double dv = std::ldexp(1.0, bits[r]);
          for (std::size_t x = 0; x < out.size(); x += step)
            out.values[x] += sign_of(mask, x) * pv * dv;
        }
      }
      double inv = 1.0 / static_cast<double>(n);
      for (double& v : out.values) v *= inv;
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

double lebesgue_constant(index_t n) {
  if (n == 0) throw std::invalid_argument("Lebesgue constant needs n >= 1");
  int L = top_bit(n) + 1;
  if (L > max_resolution())
    throw resolution_error("index too large for exact Lebesgue computation");
  DyadicFunction d = dirichlet(n, L, DirichletMethod::recursive);
  return simd::ops().abs_pow_sum(d.values.data(), d.values.size(), 1.0) /
         static_cast<double>(d.values.size());
}

double lebesgue_constant_closed(index_t n) {
  if (n == 0) throw std::invalid_argument("Lebesgue constant needs n >= 1");
  // |D_n| is constant on each shell I_j \ I_{j+1}: it equals
  // |(n mod 2^j) - n_j 2^j| there, and D_n = n on I_{|n|+1}.
  int top = top_bit(n);
  double sum = 0.0;
  for (int j = 0; j <= top; ++j) {
    index_t mod = n & ((index_t{1} << j) - 1);
    double shell = (n >> j) & 1
                       ? static_cast<double>((index_t{1} << j) - mod)
                       : static_cast<double>(mod);
    sum += std::ldexp(shell, -j - 1);
  }
  sum += std::ldexp(static_cast<double>(n), -top - 1);
  return sum;
}

double fejer_l1(index_t n) {
  if (n == 0) throw std::invalid_argument("fejer_l1 needs n >= 1");
  int L = top_bit(n) + 1;
  if (L > max_resolution())
    throw resolution_error("index too large for exact Fejer mass computation");
  DyadicFunction k = fejer_kernel(n, L, FejerMethod::lemma3);
  return simd::ops().abs_pow_sum(k.values.data(), k.values.size(), 1.0) /
         static_cast<double>(k.values.size());
}

ExperimentTable lebesgue_cesaro(index_t n_max) {
  if (n_max < 16) throw std::invalid_argument("lebesgue_cesaro needs n_max >= 16");
  const double target = 1.0 / (4.0 * std::log(2.0));
  ExperimentTable t;
  t.name = "lebesgue_cesaro";
  t.columns = {"n", "variation_statistic", "variation_error",
               "lebesgue_statistic", "lebesgue_error"};
  t.metadata["reference_constant"] = format_double(target);

  double v_sum = 0.0;
  double l_sum = 0.0;
  index_t next = 16;
  for (index_t k = 1; k <= n_max; ++k) {
    v_sum += variation(k);
    l_sum += lebesgue_constant_closed(k);
    if (k == next) {
      double denom = static_cast<double>(k) * std::log(static_cast<double>(k));
      double v_stat = v_sum / denom;
      double l_stat = l_sum / denom;
      t.add_row({static_cast<double>(k), v_stat, std::fabs(v_stat - target),
                 l_stat, std::fabs(l_stat - target)});
      next *= 2;
    }
  }
  return t;
}

double fejer_majorant_max_ratio(index_t n, int N) {
  require_index_range(n, N);
  BlockDecomposition st = index_stats(n);
  DyadicFunction nk = fejer_kernel(n, N, FejerMethod::lemma3);
  std::vector<double> majorant(nk.size(), static_cast<double>(st.variation));
  for (const Run& run : st.runs) {
    DyadicFunction kl = fejer_pow2_closed(run.l, N);
    DyadicFunction km = fejer_pow2_closed(run.m, N);
    double sl = std::ldexp(1.0, run.l);
    double sm = std::ldexp(1.0, run.m);
    for (std::size_t x = 0; x < majorant.size(); ++x)
      majorant[x] += sl * kl.values[x] + sm * km.values[x];
    for (int k = run.l; k <= run.m; ++k) {
      std::size_t step = std::size_t{1} << k;
      double dv = sl * std::ldexp(1.0, k);
      for (std::size_t x = 0; x < majorant.size(); x += step) majorant[x] += dv;
    }
  }
  double worst = 0.0;
  double dn = static_cast<double>(n);
  for (std::size_t x = 0; x < majorant.size(); ++x) {
    double r = std::fabs(dn * nk.values[x]) / majorant[x];
    if (r > worst) worst = r;
  }
  return worst;
}

double fejer_run_lower_bound_margin(index_t n, int N) {
  require_index_range(n, N);
  BlockDecomposition st = index_stats(n);
  DyadicFunction nk = fejer_kernel(n, N, FejerMethod::lemma3);
  double dn = static_cast<double>(n);
  double margin = std::numeric_limits<double>::infinity();
  for (const Run& run : st.runs) {
    int li = run.l;
    if (li < 1) continue;
    if (li + 1 > N) continue;
    double bound = std::ldexp(1.0, 2 * li) / 16.0;
    if (li == 1) bound = 7.0 / 8.0;  // the sharper branch
    point_t base = e_point(li - 1) ^ e_point(li);
    std::size_t step = std::size_t{1} << (li + 1);
    for (std::size_t x = base; x < nk.size(); x += step) {
      double v = std::fabs(dn * nk.values[x]) / bound;
      if (v < margin) margin = v;
    }
  }
  return margin;
}

double fejer_translated_mass(index_t n, int N, point_t x, int M) {
  require_index_range(n, N);
  if (M > N) throw std::out_of_range("support level exceeds resolution");
  DyadicFunction k = fejer_kernel(n, N, FejerMethod::lemma3);
  double sum = 0.0;
  std::size_t step = std::size_t{1} << M;
  for (std::size_t t = 0; t < k.size(); t += step)
    sum += std::fabs(k.values[x ^ t]);
  return sum / static_cast<double>(k.size());
}

std::vector<KernelReport> kernel_bounds_report(const std::vector<index_t>& n_set, int N) {
  std::vector<KernelReport> out;
  out.reserve(n_set.size());
  for (index_t n : n_set) {
    KernelReport r;
    r.n = n;
    r.l1_norm = lebesgue_constant(n);
    r.variation = variation(n);
    r.lower_bound_ok = static_cast<double>(r.variation) / 8.0 <= r.l1_norm + 1e-12;
    r.upper_bound_ok = r.l1_norm <= static_cast<double>(r.variation) + 1e-12;
    r.max_ratio = fejer_majorant_max_ratio(n, N);
    out.push_back(r);
  }
  return out;
}

}  // namespace walsh
