#pragma once

#include <cstddef>

// AVX2+FMA kernel variants. Only compiled on x86-64 (the dispatch layer never
// selects them elsewhere). Declarations are unconditional so dispatch.cpp can
// reference them behind its own guard.

namespace nrange::kernels::avx2 {

double sum(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double dot_reversed(const double* x, const double* y, std::size_t n);
double directional_max(const double* xs, const double* ys, std::size_t n,
                       double c, double s);

}  // namespace nrange::kernels::avx2
