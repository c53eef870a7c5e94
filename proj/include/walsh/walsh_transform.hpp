#pragma once

#include "walsh/types.hpp"

namespace walsh {

// w_n(x) = (-1)^{popcount(n & x)}, the Walsh-Paley character.
int walsh_eval(index_t n, point_t x, int N);

// In-place unnormalized transform: a[k] <- sum_x (-1)^{popcount(k & x)} a[x].
// Applying it twice multiplies by 2^N.
void fwht_inplace(std::vector<double>& a);

// f_hat(k) = integral of f * w_k, i.e. FWHT scaled by 2^{-N}.
SpectralVector analyze(const DyadicFunction& f);

// values[x] = sum_k coeffs[k] w_k(x), the unnormalized inverse.
DyadicFunction synthesize(const SpectralVector& s);

}  // namespace walsh
