#pragma once

#include <string_view>

#include "nrange/convex_region.hpp"

namespace nrange::catalog {

// Closed-form alpha-numerical ranges of the named operators, used as ground
// truth against the sweep engine.

/// sin(pi a)/(pi a) for a in (0,1]; with allow_zero_limit, a = 0 returns the
/// limit 1
double haar_radius(double alpha, bool allow_zero_limit = false);

/// Disk radius for the circular operator: solves f(h) = alpha by bisection on
/// [-sqrt2, sqrt2], where f(y) = 1/2 - y sqrt(2-y^2)/(2 pi) - asin(y/sqrt2)/pi
/// is the tail of the semicircle law of Re(Z), then evaluates
/// (2 - h^2)^{3/2} / (3 pi alpha). With allow_zero_limit, alpha = 0 returns
/// sqrt(2).
double circular_radius(double alpha, bool allow_zero_limit = false);

/// the tail function f above (exposed for the inverse-consistency tests)
double circular_tail(double y);

class ClosedFormRange {
 public:
  enum class Kind { disk, ellipse, interval, point };

  static ClosedFormRange disk(double radius);
  static ClosedFormRange ellipse(double semi_x, double semi_y);
  static ClosedFormRange interval(double lo, double hi);
  static ClosedFormRange point(cplx z);

  Kind kind() const { return kind_; }
  double radius() const { return a_; }
  double semi_x() const { return a_; }
  double semi_y() const { return b_; }
  double lo() const { return a_; }
  double hi() const { return b_; }
  cplx location() const { return z_; }

  /// closed-form supporting function
  double support(double theta) const;
  /// inscribed polygon with vertices on the boundary
  ConvexRegion to_region(int directions) const;

 private:
  Kind kind_ = Kind::point;
  double a_ = 0.0, b_ = 0.0;
  cplx z_ = 0.0;
};

/// Known names: haar_unitary, tucci, circular, dt_quasinilpotent,
/// elliptic (psi required, in (0, pi/2)). Throws on anything else.
ClosedFormRange closed_form(std::string_view name, double alpha,
                            double psi = 0.0);

}  // namespace nrange::catalog
