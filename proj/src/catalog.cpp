#include "nrange/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace nrange::catalog {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::domain_error("alpha must lie in (0,1]");
}

const double kSqrt2 = std::sqrt(2.0);

}  // namespace

double haar_radius(double alpha, bool allow_zero_limit) {
  if (allow_zero_limit && alpha == 0.0) return 1.0;
  check_alpha(alpha);
  return std::sin(M_PI * alpha) / (M_PI * alpha);
}

double circular_tail(double y) {
  if (y <= -kSqrt2) return 1.0;
  if (y >= kSqrt2) return 0.0;
  const double u = std::clamp(y / kSqrt2, -1.0, 1.0);
  return 0.5 - y * std::sqrt(std::max(0.0, 2.0 - y * y)) / (2.0 * M_PI) -
         std::asin(u) / M_PI;
}

double circular_radius(double alpha, bool allow_zero_limit) {
  if (allow_zero_limit && alpha == 0.0) return kSqrt2;
  check_alpha(alpha);
  // f is strictly decreasing with f(sqrt2)=0, f(-sqrt2)=1; bisection is
  // unconditionally convergent where Newton stalls at the endpoints
  double lo = -kSqrt2, hi = kSqrt2;
  for (int it = 0; it < 80 && hi - lo > 1e-13; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (circular_tail(mid) > alpha)
      lo = mid;
    else
      hi = mid;
  }
  const double h = 0.5 * (lo + hi);
  return std::pow(std::max(0.0, 2.0 - h * h), 1.5) / (3.0 * M_PI * alpha);
}

ClosedFormRange ClosedFormRange::disk(double radius) {
  if (radius < 0.0) throw std::invalid_argument("disk: negative radius");
  ClosedFormRange r;
  r.kind_ = Kind::disk;
  r.a_ = radius;
  return r;
}

ClosedFormRange ClosedFormRange::ellipse(double semi_x, double semi_y) {
  if (semi_x < 0.0 || semi_y < 0.0)
    throw std::invalid_argument("ellipse: negative semi-axis");
  ClosedFormRange r;
  r.kind_ = Kind::ellipse;
  r.a_ = semi_x;
  r.b_ = semi_y;
  return r;
}

ClosedFormRange ClosedFormRange::interval(double lo, double hi) {
  if (hi < lo) throw std::invalid_argument("interval: hi < lo");
  ClosedFormRange r;
  r.kind_ = Kind::interval;
  r.a_ = lo;
  r.b_ = hi;
  return r;
}

ClosedFormRange ClosedFormRange::point(cplx z) {
  ClosedFormRange r;
  r.kind_ = Kind::point;
  r.z_ = z;
  return r;
}

double ClosedFormRange::support(double theta) const {
  const double c = std::cos(theta), s = std::sin(theta);
  switch (kind_) {
    case Kind::disk: return a_;
    case Kind::ellipse:
      return std::sqrt(a_ * a_ * c * c + b_ * b_ * s * s);
    case Kind::interval: return std::max(a_ * c, b_ * c);
    case Kind::point: return c * z_.real() - s * z_.imag();
  }
  return 0.0;
}

ConvexRegion ClosedFormRange::to_region(int directions) const {
  switch (kind_) {
    case Kind::disk:
      if (a_ == 0.0) return ConvexRegion::from_vertices({cplx(0.0)});
      [[fallthrough]];
    case Kind::ellipse: {
      const double ax = a_;
      const double ay = kind_ == Kind::disk ? a_ : b_;
      if (ax == 0.0 && ay == 0.0)
        return ConvexRegion::from_vertices({cplx(0.0)});
      std::vector<cplx> verts;
      verts.reserve(directions);
      for (double phi : uniform_angles(directions))
        verts.emplace_back(ax * std::cos(phi), ay * std::sin(phi));
      return ConvexRegion::from_vertices(std::move(verts));
    }
    case Kind::interval:
      if (a_ == b_) return ConvexRegion::from_vertices({cplx(a_, 0.0)});
      return ConvexRegion::from_vertices({cplx(a_, 0.0), cplx(b_, 0.0)});
    case Kind::point:
      return ConvexRegion::from_vertices({z_});
  }
  throw std::logic_error("ClosedFormRange::to_region: bad kind");
}

ClosedFormRange closed_form(std::string_view name, double alpha, double psi) {
  check_alpha(alpha);
  if (name == "haar_unitary") return ClosedFormRange::disk(haar_radius(alpha));
  if (name == "tucci") return ClosedFormRange::disk(0.5 * (1.0 - alpha));
  if (name == "circular")
    return ClosedFormRange::disk(circular_radius(alpha));
  if (name == "dt_quasinilpotent")
    return ClosedFormRange::disk(circular_radius(alpha) / std::sqrt(2.0));
  if (name == "elliptic") {
    if (!(psi > 0.0) || !(psi < M_PI / 2.0))
      throw std::invalid_argument("elliptic: psi must lie in (0, pi/2)");
    const double r = circular_radius(alpha);
    return ClosedFormRange::ellipse(std::sqrt(2.0) * r * std::cos(psi),
                                    std::sqrt(2.0) * r * std::sin(psi));
  }
  throw std::invalid_argument("closed_form: unknown operator name '" +
                              std::string(name) + "'");
}

}  // namespace nrange::catalog
