#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "nrange/kernels.hpp"

using namespace nrange;

namespace {

std::vector<double> random_vector(std::mt19937_64& gen, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = u(gen);
  return v;
}

// sizes straddling the 4- and 8-wide vector boundaries
const std::size_t kSizes[] = {1, 2, 3, 4, 5, 7, 8, 9, 15, 16, 17,
                              31, 32, 33, 63, 64, 65, 127, 1000, 4096};

}  // namespace

TEST_CASE("dispatched kernels match the scalar reference") {
  std::mt19937_64 gen(991);
  INFO("active backend: ",
       kernels::backend_name(kernels::active_backend()));
  for (std::size_t n : kSizes) {
    auto x = random_vector(gen, n);
    auto y = random_vector(gen, n);
    const double tol = static_cast<double>(n) * 1e-15 + 1e-15;

    CHECK(std::abs(kernels::sum(x.data(), n) -
                   kernels::scalar::sum(x.data(), n)) <= tol);
    CHECK(std::abs(kernels::dot(x.data(), y.data(), n) -
                   kernels::scalar::dot(x.data(), y.data(), n)) <= tol);
    CHECK(std::abs(kernels::dot_reversed(x.data(), y.data(), n) -
                   kernels::scalar::dot_reversed(x.data(), y.data(), n)) <=
          tol);
    const double c = std::cos(0.7), s = std::sin(0.7);
    CHECK(std::abs(kernels::directional_max(x.data(), y.data(), n, c, s) -
                   kernels::scalar::directional_max(x.data(), y.data(), n, c,
                                                    s)) <= 1e-15);
  }
}

TEST_CASE("scalar kernel identities") {
  std::mt19937_64 gen(5);
  for (std::size_t n : {1u, 5u, 64u, 257u}) {
    auto x = random_vector(gen, n);
    auto y = random_vector(gen, n);
    std::vector<double> yr(y.rbegin(), y.rend());
    CHECK(kernels::scalar::dot_reversed(x.data(), y.data(), n) ==
          doctest::Approx(kernels::scalar::dot(x.data(), yr.data(), n))
              .epsilon(1e-14));
    // directional max dominates every sample
    const double c = -0.3, s = 0.95;
    const double m = kernels::scalar::directional_max(x.data(), y.data(), n, c, s);
    for (std::size_t i = 0; i < n; ++i) CHECK(m >= c * x[i] + s * y[i]);
  }
}

TEST_CASE("kernels on exactly representable data are exact") {
  // power-of-two widths and small integers: every intermediate is exact, so
  // any summation order gives the same double
  std::vector<double> x = {3, 1, 4, 1, 5, 9, 2, 6};
  std::vector<double> y = {2, 7, 1, 8, 2, 8, 1, 8};
  CHECK(kernels::sum(x.data(), 8) == 31.0);
  CHECK(kernels::dot(x.data(), y.data(), 8) == 6.0 + 7 + 4 + 8 + 10 + 72 + 2 + 48);
  CHECK(kernels::dot_reversed(x.data(), y.data(), 8) ==
        3.0 * 8 + 1 * 1 + 4 * 8 + 1 * 2 + 5 * 8 + 9 * 1 + 2 * 7 + 6 * 2);
}
