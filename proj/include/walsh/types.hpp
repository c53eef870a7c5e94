#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace walsh {

using index_t = std::uint64_t;
using point_t = std::uint64_t;

// Hard cap on the resolution N (cells = 2^N). Default 20, about 8 MB per
// function in doubles. Override with the WALSH_MAX_RESOLUTION environment
// variable.
int max_resolution();

inline std::size_t cell_count(int resolution) {
  return std::size_t{1} << resolution;
}

void check_resolution(int resolution);

// Step function on the dyadic group at resolution N. values[j] is the value
// on the level-N cell whose point has coordinates x_0..x_{N-1} equal to the
// bits of j, low bit = x_0. Haar measure of each cell is 2^{-N}.
struct DyadicFunction {
  int resolution = 0;
  std::vector<double> values;

  DyadicFunction() = default;
  DyadicFunction(int N, double fill = 0.0) : resolution(N) {
    check_resolution(N);
    values.assign(cell_count(N), fill);
  }

  std::size_t size() const { return values.size(); }
  double integral() const;
};

// Walsh-Fourier coefficients in Paley order, coeffs[k] = f_hat(k).
struct SpectralVector {
  int resolution = 0;
  std::vector<double> coeffs;

  SpectralVector() = default;
  explicit SpectralVector(int N, double fill = 0.0) : resolution(N) {
    check_resolution(N);
    coeffs.assign(cell_count(N), fill);
  }

  std::size_t size() const { return coeffs.size(); }
};

struct resolution_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace walsh
