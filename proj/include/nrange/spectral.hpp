#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nrange/matrix_ops.hpp"
#include "nrange/step_function.hpp"

namespace nrange {

struct Atom {
  cplx location;
  double weight;
};

// Spectral description of an operator: a finite matrix, an atomic measure (a
// normal operator with finite spectrum), or one of the named operators with
// known real-part laws.
//
// Convention for the named laws: a (0,1)-semicircular operator has variance 1
// and support [-2,2]; the real part of the circular operator is X/sqrt(2),
// i.e. semicircular with variance 1/2 on [-sqrt(2),sqrt(2)].
class SpectralModel {
 public:
  enum class Kind { matrix, atomic, named };
  enum class Named {
    haar_unitary,
    semicircular,
    circular,
    tucci,
    dt_quasinilpotent,
    elliptic
  };

  static SpectralModel matrix(ComplexMatrix m);
  static SpectralModel atomic(std::vector<Atom> atoms);
  static SpectralModel haar_unitary();
  static SpectralModel semicircular(double mean, double variance);
  static SpectralModel circular();
  static SpectralModel tucci();
  static SpectralModel dt_quasinilpotent();
  static SpectralModel elliptic(double psi);  // psi in (0, pi/2)

  Kind kind() const { return kind_; }
  Named named() const { return named_; }
  const ComplexMatrix& matrix_value() const { return *matrix_; }
  const std::vector<Atom>& atoms() const { return atoms_; }
  double mean() const { return p1_; }
  double variance() const { return p2_; }
  double psi() const { return p1_; }

  bool is_selfadjoint(double tol = 1e-12) const;
  cplx trace() const;
  double norm_bound() const;  // operator norm (exact for these models)
  std::string describe() const;

 private:
  SpectralModel() = default;
  Kind kind_ = Kind::named;
  Named named_ = Named::haar_unitary;
  std::optional<ComplexMatrix> matrix_;
  std::vector<Atom> atoms_;
  double p1_ = 0.0, p2_ = 0.0;
};

// Compactly supported probability measure on the real line: atomic, or a
// named density with closed-form tail. The semicircle law carries a variance
// and a mean shift (rotated semicircular operators produce both).
class RealDistribution {
 public:
  enum class Kind { atomic, semicircle, cosine_pushforward, linear_tucci };

  static RealDistribution atomic(std::vector<std::pair<double, double>> atoms);
  static RealDistribution semicircle(double variance, double shift = 0.0);
  /// law of cos(u), u uniform on [-pi,pi] (real part of a Haar unitary)
  static RealDistribution cosine_pushforward();
  /// uniform on [-1/2, 1/2]; quantile (1-2s)/2
  static RealDistribution linear_tucci();

  Kind kind() const { return kind_; }
  const std::vector<std::pair<double, double>>& atoms() const { return atoms_; }
  double variance() const { return variance_; }
  double shift() const { return shift_; }
  double support_min() const;
  double support_max() const;

  bool operator==(const RealDistribution&) const = default;

 private:
  RealDistribution() = default;
  Kind kind_ = Kind::atomic;
  std::vector<std::pair<double, double>> atoms_;  // (value, weight), ascending
  double variance_ = 0.0;
  double shift_ = 0.0;
};

/// Eigenvalue function (quantile) of d as a StepFunction. Atomic measures are
/// exact (one piece per atom, resolution ignored); continuous densities use
/// the midpoint-quantile discretization on `resolution` equal cells. Output
/// is sorted non-increasing.
StepFunction quantile_step(const RealDistribution& d, int resolution);

/// spectral distribution of Re(e^{i theta} T) for the given model
RealDistribution real_part_distribution(const SpectralModel& m, double theta);

/// tail mass of the unit semicircle on [-1,1]: m((u, 1]) under the density
/// (2/pi) sqrt(1-u^2)
double semicircle_unit_tail(double u);
/// inverse of the unit tail by bisection (tolerance 1e-15 on u)
double semicircle_unit_quantile(double s);

inline constexpr int kDefaultResolution = 4096;

}  // namespace nrange
