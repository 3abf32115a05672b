#include "nrange/kernels.hpp"

#include <cassert>

namespace nrange::kernels::scalar {

double sum(const double* x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i];
  return acc;
}

double dot(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

double dot_reversed(const double* x, const double* y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[n - 1 - i];
  return acc;
}

double directional_max(const double* xs, const double* ys, std::size_t n,
                       double c, double s) {
  assert(n >= 1);
  double best = c * xs[0] + s * ys[0];
  for (std::size_t i = 1; i < n; ++i) {
    double v = c * xs[i] + s * ys[i];
    if (v > best) best = v;
  }
  return best;
}

}  // namespace nrange::kernels::scalar
