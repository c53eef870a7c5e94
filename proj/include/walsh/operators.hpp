#pragma once

#include <string>
#include <vector>

#include "walsh/types.hpp"

namespace walsh {

// Index families the boundedness/divergence experiments iterate over.
struct OperatorConfig {
  enum class Family { pow2, pow2_plus1, pow2_plus_half, custom };
  Family family = Family::custom;
  std::vector<index_t> indices;

  static OperatorConfig named(const std::string& name, int k_min, int k_max);
  static OperatorConfig custom_set(std::vector<index_t> idx);
};

// S_n f, spectral truncation to coefficients below n.
DyadicFunction partial_sum(const DyadicFunction& f, index_t n);

// sigma_n f = (1/n) sum_{k=1}^{n} S_k f, computed spectrally with weights
// (n-k)/n.
DyadicFunction fejer_mean(const DyadicFunction& f, index_t n);

// E_n f: level-n cell averages. Equals S_{2^n} f.
DyadicFunction condexp(const DyadicFunction& f, int n);

enum class OperatorKind { partial_sum, fejer };

// Pointwise max of |S_m f| (or |sigma_m f|) over the index set.
DyadicFunction maximal(const DyadicFunction& f, const OperatorConfig& cfg,
                       OperatorKind kind);

// Martingale maximal function: max over levels k in [0, N] of |S_{2^k} f|.
// Single pass over the averaging pyramid, O(2^N) total.
DyadicFunction maximal_pow2(const DyadicFunction& f);

DyadicFunction translate(const DyadicFunction& f, point_t h);

enum class Space { Lp, Hp };

// omega(2^{-n}, f) in the chosen space: the norm of f - S_{2^n} f.
double modulus_continuity(const DyadicFunction& f, int n, double p, Space space);

// Classical dyadic modulus sup_{h in I_n} ||f(.+h) - f||_p.
double translation_modulus(const DyadicFunction& f, int n, double p);

}  // namespace walsh
