#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "nrange/matrix_ops.hpp"

namespace nrange {

// Supporting-function sample of a compact convex subset of the plane:
// g(theta) = sup Re(e^{i theta} z) over the set, at strictly increasing
// angles in [0, 2pi).
struct SupportSample {
  std::vector<double> thetas;
  std::vector<double> values;
};

/// uniform grid 2*pi*j/n, j = 0..n-1
std::vector<double> uniform_angles(int directions);

inline constexpr int kDefaultDirections = 720;

// Compact convex subset of C stored as a counterclockwise polygon (possibly a
// segment or a single point) plus, optionally, the support sample it was
// reconstructed from.
class ConvexRegion {
 public:
  /// Canonicalizes the vertex list (convex hull, CCW, collinear points and
  /// duplicates dropped). One or two points stay as-is.
  static ConvexRegion from_vertices(std::vector<cplx> vertices,
                                    std::optional<SupportSample> s = {});

  const std::vector<cplx>& vertices() const { return vertices_; }
  const std::optional<SupportSample>& support() const { return support_; }

  bool is_point() const { return vertices_.size() == 1; }
  bool is_segment() const { return vertices_.size() == 2; }

  /// exact supporting function of the stored polygon
  double support_value(double theta) const;
  /// largest |vertex|
  double extent() const;

 private:
  std::vector<cplx> vertices_;
  std::optional<SupportSample> support_;
};

/// Intersection of the half-planes Re(e^{i theta_j} z) <= g(theta_j), via
/// consecutive supporting-line intersections filtered against all other
/// half-planes (tolerance 1e-9 * max(1, max|g|)). Throws on an empty
/// intersection (inconsistent sample).
ConvexRegion region_from_support(const SupportSample& s);

/// Euclidean distance from p to the region (0 when inside)
double distance_to(const ConvexRegion& a, cplx p);

/// exact Hausdorff distance between two convex polygons
double hausdorff(const ConvexRegion& a, const ConvexRegion& b);

/// region with supporting function s*g_a + t*g_b (Minkowski combination);
/// sampled on a's grid when present, else the default uniform grid
ConvexRegion minkowski_combine(const ConvexRegion& a, double s,
                               const ConvexRegion& b, double t);

/// b inside a inflated by slack (checked exactly on b's vertices)
bool contains(const ConvexRegion& a, const ConvexRegion& b, double slack);

/// w*z + offset applied to every vertex
ConvexRegion transformed(const ConvexRegion& a, cplx w, cplx offset);

}  // namespace nrange
