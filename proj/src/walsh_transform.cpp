#include "walsh/walsh_transform.hpp"

#include <bit>
#include <stdexcept>

#include "walsh/simd.hpp"

namespace walsh {

int walsh_eval(index_t n, point_t x, int N) {
  check_resolution(N);
  index_t lim = index_t{1} << N;
  if (n >= lim || x >= lim)
    throw std::out_of_range("walsh_eval arguments exceed resolution");
  return (std::popcount(n & x) & 1) ? -1 : 1;
}

void fwht_inplace(std::vector<double>& a) {
  if (a.empty() || (a.size() & (a.size() - 1)) != 0)
    throw std::invalid_argument("fwht needs a power-of-two length");
  simd::ops().fwht(a.data(), a.size());
}

SpectralVector analyze(const DyadicFunction& f) {
  SpectralVector s(f.resolution);
  s.coeffs = f.values;
  fwht_inplace(s.coeffs);
  double scale = 1.0 / static_cast<double>(s.coeffs.size());
  for (double& c : s.coeffs) c *= scale;
  return s;
}

DyadicFunction synthesize(const SpectralVector& s) {
  DyadicFunction f(s.resolution);
  f.values = s.coeffs;
  fwht_inplace(f.values);
  return f;
}

}  // namespace walsh
