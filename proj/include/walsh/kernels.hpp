#pragma once

#include <vector>

#include "walsh/dyadic_core.hpp"
#include "walsh/table.hpp"
#include "walsh/types.hpp"

namespace walsh {

enum class DirichletMethod { direct, lemma1, recursive };
enum class FejerMethod { direct, weighted, lemma3 };

// D_n = sum_{i<n} w_i by one of three independent routes:
//   direct     pointwise sum of characters
//   lemma1     D_n = w_n sum_k n_k (D_{2^{k+1}} - D_{2^k}) with the closed
//              form D_{2^k} = 2^k on I_k, 0 elsewhere
//   recursive  peel the top set bit via D_{j+2^m} = D_{2^m} + w_{2^m} D_j
DyadicFunction dirichlet(index_t n, int N,
                         DirichletMethod method = DirichletMethod::recursive);

// D_{2^n} - w_{2^n-1} D_j, which equals D_{2^n-j} for j < 2^n.
DyadicFunction dirichlet_reflection(int n, index_t j, int N);

// K_n = (1/n) sum_{k=1}^n D_k:
//   direct     literal average of Dirichlet kernels
//   weighted   spectral synthesis with coefficients (1 - k/n) for k < n
//   lemma3     the set-bit decomposition of nK_n, divided by n
DyadicFunction fejer_kernel(index_t n, int N,
                            FejerMethod method = FejerMethod::weighted);

// Piecewise closed form of K_{2^m}: 2^{t-1} on I_m(e_t) for t < m,
// (2^m+1)/2 on I_m, 0 elsewhere.
DyadicFunction fejer_pow2_closed(int m, int N);

// Exact L1 norm of D_n computed on the level |n|+1 grid.
double lebesgue_constant(index_t n);

// Same value from the radial shell formula, O(log n) per index. |D_n| is
// constant on each shell I_j \ I_{j+1} where it equals
// |(n mod 2^j) - n_j 2^j|, and D_n = n on I_{|n|+1}.
double lebesgue_constant_closed(index_t n);

// Rows (n, (1/(n log n)) sum_{k<=n} V(k), same statistic built from L(k),
// errors against the reference constant 1/(4 log 2)) on a geometric grid.
ExperimentTable lebesgue_cesaro(index_t n_max);

struct KernelReport {
  index_t n = 0;
  double l1_norm = 0.0;     // L(n) = ||D_n||_1
  int variation = 0;        // V(n)
  bool lower_bound_ok = false;  // V(n)/8 <= l1_norm
  bool upper_bound_ok = false;  // l1_norm <= V(n)
  double max_ratio = 0.0;   // pointwise |nK_n| / (run-sum majorant + V(n))
};

// Per-index report: the two-sided variation bound on the Lebesgue constant
// and the run-sum majorant ratio for |nK_n|.
std::vector<KernelReport> kernel_bounds_report(const std::vector<index_t>& n_set, int N);

// Exact integral of |K_n| on the level |n|+1 grid.
double fejer_l1(index_t n);

// Largest pointwise ratio |nK_n| / majorant over the given indices, where
// the majorant is sum_A (2^{l_A}|K_{2^{l_A}}| + 2^{m_A}|K_{2^{m_A}}| +
// 2^{l_A} sum_{k=l_A}^{m_A} D_{2^k}) + V(n).
double fejer_majorant_max_ratio(index_t n, int N);

// Smallest value of n|K_n| / bound(l_i) over the cells of
// I_{l_i+1}(e_{l_i-1}+e_{l_i}), minimized over the runs of n with l_i >= 1,
// where bound(l_i) = 2^{2 l_i}/16 except at l_i = 1 where the sharper 7/8
// applies. A return value >= 1 means the lower bound holds for every run.
double fejer_run_lower_bound_margin(index_t n, int N);

// Integral over I_M of |K_n(x + t)| dmu(t) for a fixed x.
double fejer_translated_mass(index_t n, int N, point_t x, int M);

}  // namespace walsh
