#include "nrange/kernels.hpp"

#include <cstdlib>
#include <cstring>

#include "kernels_avx2.hpp"

namespace nrange::kernels {

namespace {

struct Table {
  Backend backend;
  double (*sum)(const double*, std::size_t);
  double (*dot)(const double*, const double*, std::size_t);
  double (*dot_reversed)(const double*, const double*, std::size_t);
  double (*directional_max)(const double*, const double*, std::size_t, double,
                            double);
};

constexpr Table kScalarTable = {Backend::scalar, scalar::sum, scalar::dot,
                                scalar::dot_reversed, scalar::directional_max};

#if defined(NRANGE_HAVE_AVX2)
constexpr Table kAvx2Table = {Backend::avx2, avx2::sum, avx2::dot,
                              avx2::dot_reversed, avx2::directional_max};

bool cpu_has_avx2() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

Table select() {
  const char* env = std::getenv("NRANGE_KERNELS");
  if (env && std::strcmp(env, "scalar") == 0) return kScalarTable;
#if defined(NRANGE_HAVE_AVX2)
  if (cpu_has_avx2()) return kAvx2Table;
#endif
  return kScalarTable;
}

const Table& table() {
  static const Table t = select();
  return t;
}

}  // namespace

Backend active_backend() { return table().backend; }

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "unknown";
}

double sum(const double* x, std::size_t n) { return table().sum(x, n); }

double dot(const double* x, const double* y, std::size_t n) {
  return table().dot(x, y, n);
}

double dot_reversed(const double* x, const double* y, std::size_t n) {
  return table().dot_reversed(x, y, n);
}

double directional_max(const double* xs, const double* ys, std::size_t n,
                       double c, double s) {
  return table().directional_max(xs, ys, n, c, s);
}

}  // namespace nrange::kernels
