#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "nrange/step_function.hpp"

namespace nrange {

using cplx = std::complex<double>;

/// Dense square complex matrix, row-major. The normalized trace tau = Tr/n is
/// the trace used everywhere in this library.
class ComplexMatrix {
 public:
  explicit ComplexMatrix(std::size_t n);
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(const std::vector<cplx>& d);

  std::size_t dim() const { return n_; }
  cplx& at(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const cplx& at(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  const std::vector<cplx>& data() const { return a_; }

  ComplexMatrix adjoint() const;
  cplx trace() const;
  cplx normalized_trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  /// max |a_ij - conj(a_ji)| <= tol * max(1, max_abs())
  bool is_hermitian(double tol) const;

 private:
  std::size_t n_;
  std::vector<cplx> a_;
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, cplx w);

/// (e^{i theta} T + (e^{i theta} T)^*)/2, exactly Hermitian by averaging
ComplexMatrix hermitian_part(const ComplexMatrix& t, double theta);

struct HermitianEigen {
  std::vector<double> eigenvalues;  // sorted non-increasing
};

/// Cyclic Jacobi iteration to off-diagonal Frobenius norm <= 1e-12 * ||H||_F.
/// Rejects inputs that are not Hermitian within 1e-12 (relative).
HermitianEigen hermitian_eigenvalues(const ComplexMatrix& h);

/// lambda of Re(e^{i theta} T) for the normalized trace: n equal pieces
/// carrying the sorted eigenvalues
StepFunction eigenvalue_function_of_matrix(const ComplexMatrix& t,
                                           double theta);

double operator_norm(const ComplexMatrix& t);

/// Seedable PRNG used by all sampling: mt19937_64 uniforms plus a fixed
/// Box-Muller transform, so seeded runs reproduce across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform01();  // [0,1)
  double normal();     // standard normal
  cplx complex_normal() { return {normal(), normal()}; }
  static std::uint64_t shard_seed(std::uint64_t root, std::uint64_t shard);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Haar-distributed unitary: QR of a complex Gaussian matrix via twice-applied
/// modified Gram-Schmidt (R's diagonal positive by construction).
ComplexMatrix random_unitary(std::size_t n, Rng& rng);
ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed);

/// P = U diag(1 x k, 0 x (n-k)) U* for Haar U
ComplexMatrix random_projection(std::size_t n, std::size_t k,
                                std::uint64_t seed);

}  // namespace nrange
