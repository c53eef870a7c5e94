#pragma once

#include <optional>
#include <random>
#include <string>

#include "walsh/dyadic_core.hpp"
#include "walsh/types.hpp"

namespace walsh {

// (2^{-N} sum |values|^p)^{1/p}. p = infinity is not modeled; use sup_norm.
double lp_norm(const DyadicFunction& f, double p);

// sum of |values|^p scaled by the cell measure, i.e. the p-th power of
// lp_norm. Cheaper building block for quasi-norm arithmetic.
double lp_pow(const DyadicFunction& f, double p);

double sup_norm(const DyadicFunction& f);

// max over realized values v > 0 of |f| of v * mu(|f| >= v)^{1/p}. Exact for
// step functions: the sup over the level parameter is attained as a left
// limit at a realized value.
double weak_lp_norm(const DyadicFunction& f, double p);

// ||f||_{H_p} = ||f*||_p with f* = max_{0<=k<=N} |S_{2^k} f|. Exact at
// finite resolution: levels above N repeat f.
double hp_norm(const DyadicFunction& f, double p);

struct AtomSpec {
  double p = 1.0;
  int support_level = 0;       // M: support is a level-M interval
  point_t base_point = 0;
  // haar_pair: the two-level difference atom scaled for exponent p,
  //   2^{|alpha|(1/p-1)} (D_{2^{|alpha|+1}} - D_{2^{|alpha|}}),
  // translated to base_point. support_level is then |alpha|.
  std::optional<index_t> haar_alpha;
  // explicit payload: values on the support cells, already atom-shaped.
  std::vector<double> explicit_values;
};

DyadicFunction make_atom(const AtomSpec& spec, int N);

// Random p-atom on a random interval: mean-zero noise scaled to sup-norm
// mu(I)^{-1/p}.
DyadicFunction make_random_atom(double p, int support_level, point_t base_point,
                                int N, std::mt19937_64& rng);

struct AtomCheckResult {
  bool support_ok = false;
  bool mean_ok = false;
  bool sup_ok = false;
  double mean_abs = 0.0;
  double sup_value = 0.0;
  double sup_bound = 0.0;
  bool ok() const { return support_ok && mean_ok && sup_ok; }
};

AtomCheckResult atom_check(const DyadicFunction& a, double p,
                           const IntervalSpec& claimed_support);

}  // namespace walsh
