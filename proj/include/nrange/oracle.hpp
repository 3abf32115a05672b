#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nrange/convex_region.hpp"
#include "nrange/matrix_ops.hpp"

namespace nrange::oracle {

// Brute-force / Monte-Carlo ground truth at matrix scale, independent of the
// analytic engine.

struct OracleCloud {
  enum class Kind { projection, unitary_orbit };
  std::vector<cplx> points;
  Kind kind = Kind::projection;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t sample_count = 0;
  std::uint64_t seed = 0;
};

/// count samples of (1/alpha) tau(T P), alpha = k/n, over Haar-random rank-k
/// projections (sampled as random orthonormal k-frames, the first k columns
/// of a Haar unitary)
OracleCloud sample_projection_cloud(const ComplexMatrix& t, std::size_t k,
                                    std::size_t count, std::uint64_t seed);

/// count samples of tau(T U* C U) over Haar-random unitaries; C Hermitian
OracleCloud sample_orbit_cloud(const ComplexMatrix& t, const ComplexMatrix& c,
                               std::size_t count, std::uint64_t seed);

/// exact (max, min) of sum f_i g_{sigma(i)} / n over all permutations sigma;
/// piece lists of equal length <= 8
std::pair<double, double> permutation_pairing_oracle(
    const std::vector<double>& f, const std::vector<double>& g);

/// deterministic unit-vector sweep for n in {2,3}, k = 1: u* T u over a
/// parametrized grid of unit vectors (density points per angular parameter)
OracleCloud deterministic_vector_sweep(const ComplexMatrix& t, int density);

/// largest distance from a cloud point to the region (0 when all inside)
double max_violation(const OracleCloud& cloud, const ConvexRegion& region);

/// max over the sample's directions of g(theta) - max_points Re(e^{i th} z):
/// how far the cloud's directional maxima fall short of the claimed support
double directional_deficit(const OracleCloud& cloud, const SupportSample& s);

}  // namespace nrange::oracle
