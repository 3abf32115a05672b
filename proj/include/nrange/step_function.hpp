#pragma once

#include <cstddef>
#include <vector>

namespace nrange {

// Right-continuous piecewise-constant function on [0,1): value values_[k] on
// [breakpoints_[k], breakpoints_[k+1]). This is the concrete form of
// eigenvalue functions (spectral quantiles) throughout the library.
//
// Invariants: breakpoints start at 0, end at 1, strictly increasing; one value
// per piece; all entries finite. A StepFunction is "sorted" when its values
// are non-increasing, which is the defining property of eigenvalue functions.
class StepFunction {
 public:
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  static StepFunction constant(double c);
  /// n equal-width cells carrying the given values.
  static StepFunction uniform(std::vector<double> values);
  /// pieces given as (value, width); widths must be positive and sum to 1
  /// within 1e-9 (the last breakpoint is pinned to 1 exactly).
  static StepFunction from_pieces(
      const std::vector<std::pair<double, double>>& pieces);
  /// lambda_C of the trace-alpha projection with the 1/alpha normalization:
  /// (1/alpha) on [0,alpha), 0 on [alpha,1).
  static StepFunction indicator_weight(double alpha);

  const std::vector<double>& breakpoints() const { return breakpoints_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t piece_count() const { return values_.size(); }
  double piece_width(std::size_t k) const {
    return breakpoints_[k + 1] - breakpoints_[k];
  }

  /// right-continuous evaluation; s must lie in [0,1)
  double value_at(double s) const;

  bool is_sorted() const { return sorted_; }
  bool is_uniform() const { return uniform_; }
  double min_value() const;
  double max_value() const;
  double total_integral() const;

  StepFunction shifted(double b) const;  // values + b
  StepFunction scaled(double a) const;   // values * a

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
  bool sorted_ = false;
  bool uniform_ = false;

  friend StepFunction reversed(const StepFunction&);
};

/// non-increasing rearrangement f*: same (value,width) multiset, values sorted
/// non-increasing, equal-valued neighbours merged (canonical form)
StepFunction rearrange(const StepFunction& f);

/// f mirrored about s = 1/2: s -> f(1-s) (as a right-continuous step function)
StepFunction reversed(const StepFunction& f);

/// exact integral of f over [0,t]; t outside [0,1] is a domain error
double partial_integral(const StepFunction& f, double t);

struct MajorizationVerdict {
  bool majorizes = false;
  // t where int_0^t g - int_0^t f is largest (most violated, or most slack
  // when negative everywhere)
  double worst_t = 0.0;
  // int_0^1 f - int_0^1 g
  double total_integral_gap = 0.0;
};

inline constexpr double kMajorizationTolerance = 1e-9;

/// Does f majorize g (g ≺ f)? Both inputs are canonicalized by rearrange()
/// first. Partial integrals are compared at the merged breakpoint set, which
/// suffices since they are piecewise linear with kinks only there.
MajorizationVerdict majorizes(const StepFunction& f, const StepFunction& g,
                              double tolerance = kMajorizationTolerance);

/// exact integral of f(s)*g(s) ds, or f(s)*g(1-s) ds when rev is true;
/// computed on the merged breakpoint grid (no quadrature)
double pairing_integral(const StepFunction& f, const StepFunction& g,
                        bool rev);

/// pointwise t*f + (1-t)*g formed on the union of breakpoint sets
StepFunction pointwise_combine(const StepFunction& f, const StepFunction& g,
                               double t);

}  // namespace nrange
