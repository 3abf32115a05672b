#pragma once

#include <cstddef>
#include <string_view>

namespace nrange::kernels {

// Data-parallel inner loops shared by the range engine and the Monte-Carlo
// oracle. A scalar reference implementation always exists; on x86-64 an
// AVX2+FMA variant is selected at runtime when the CPU supports it. The
// environment variable NRANGE_KERNELS=scalar|avx2 overrides the dispatch
// (falling back to scalar when the requested backend is unavailable).
//
// The two backends may differ by reassociation/FMA rounding; the equivalence
// suite bounds the difference at a few ulps relative.

enum class Backend { scalar, avx2 };

Backend active_backend();
std::string_view backend_name(Backend b);

/// sum of x[0..n)
double sum(const double* x, std::size_t n);

/// sum of x[i] * y[i]
double dot(const double* x, const double* y, std::size_t n);

/// sum of x[i] * y[n-1-i]
double dot_reversed(const double* x, const double* y, std::size_t n);

/// max over i of c*xs[i] + s*ys[i]; requires n >= 1
double directional_max(const double* xs, const double* ys, std::size_t n,
                       double c, double s);

// Reference implementations, callable directly (used by the equivalence
// tests and as the tail/fallback path).
namespace scalar {
double sum(const double* x, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
double dot_reversed(const double* x, const double* y, std::size_t n);
double directional_max(const double* xs, const double* ys, std::size_t n,
                       double c, double s);
}  // namespace scalar

}  // namespace nrange::kernels
