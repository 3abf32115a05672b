#pragma once

#include <functional>
#include <string>

#include "nrange/convex_region.hpp"
#include "nrange/spectral.hpp"
#include "nrange/step_function.hpp"

namespace nrange {

// The self-adjoint weight C, given either as the trace-alpha projection with
// the 1/alpha normalization (lambda_C = (1/alpha) 1_[0,alpha)) or as an
// explicit eigenvalue function. Step weights are canonicalized by rearrange().
class WeightSpec {
 public:
  enum class Kind { alpha, step };

  static WeightSpec alpha(double a);
  static WeightSpec step(StepFunction lambda_c);

  Kind kind() const { return kind_; }
  bool is_alpha() const { return kind_ == Kind::alpha; }
  double alpha_value() const { return alpha_; }
  const StepFunction& lambda_c() const { return lambda_c_; }

 private:
  WeightSpec(Kind k, double a, StepFunction f)
      : kind_(k), alpha_(a), lambda_c_(std::move(f)) {}
  Kind kind_;
  double alpha_;
  StepFunction lambda_c_;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// C-range of a self-adjoint operator given its eigenvalue function:
/// [ int lambda_T(s) lambda_C(1-s) ds, int lambda_T(s) lambda_C(s) ds ],
/// exact on step data. The weight must be positive (translate first via
/// V_{C+bI}(T) = V_C(T) + b tau(T) otherwise); negative weights are rejected.
Interval selfadjoint_range(const StepFunction& lambda_t, const WeightSpec& w);

/// supporting value of V_C(T) in direction theta:
/// int lambda_{Re(e^{i theta}T)}(s) lambda_C(s) ds  (positive weight only)
double support_value(const SpectralModel& m, const WeightSpec& w, double theta,
                     int resolution);

struct RangeReport {
  ConvexRegion region;
  int directions = 0;
  int resolution = 0;
  std::string operator_digest;
  std::string weight_digest;
  bool is_degenerate_interval = false;
  Interval interval;  // populated on the degenerate (self-adjoint) path
};

/// Supporting-function sweep over a uniform direction grid (augmented with
/// the atom bisector directions for atomic models, making that path exact),
/// followed by half-plane reconstruction. Self-adjoint inputs bypass the
/// sweep and return the exact interval embedded in R. Step weights with
/// negative parts are translated to positive, computed, and translated back.
RangeReport compute_range(const SpectralModel& m, const WeightSpec& w,
                          int directions, int resolution);

/// Exact alpha-range of a normal operator with finite spectrum: fractional
/// knapsack in every direction; vertices are the greedy supporting points on
/// the arcs between consecutive sort-change (bisector) directions.
ConvexRegion normal_range_exact(const std::vector<Atom>& atoms, double alpha);

/// Reconstructs the self-adjoint C-range from the alpha-range supremum table:
/// with weight pieces c_k on [x_{k-1}, x_k) and I_k = x_k sup V_{x_k} -
/// x_{k-1} sup V_{x_{k-1}}, returns [sum c_{n-k+1} I_k, sum c_k I_k].
/// alpha_sup(a) must return sup V_a(T).
Interval range_from_alpha_family(const std::function<double(double)>& alpha_sup,
                                 const StepFunction& weight);

/// deterministic digest of inputs recorded in RangeReport (FNV-1a over a
/// canonical byte encoding)
std::string digest_of(const SpectralModel& m);
std::string digest_of(const WeightSpec& w);

}  // namespace nrange
