#include "nrange/convex_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nrange {

std::vector<double> uniform_angles(int directions) {
  if (directions < 1) throw std::invalid_argument("uniform_angles: count < 1");
  std::vector<double> t(directions);
  for (int j = 0; j < directions; ++j)
    t[j] = 2.0 * M_PI * static_cast<double>(j) / directions;
  return t;
}

namespace {

double cross(cplx o, cplx a, cplx b) {
  return (a.real() - o.real()) * (b.imag() - o.imag()) -
         (a.imag() - o.imag()) * (b.real() - o.real());
}

// monotone chain; strict turns only, so duplicates and collinear interior
// points are dropped. CCW output.
std::vector<cplx> convex_hull(std::vector<cplx> pts) {
  std::sort(pts.begin(), pts.end(), [](cplx a, cplx b) {
    return a.real() < b.real() ||
           (a.real() == b.real() && a.imag() < b.imag());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t n = pts.size();
  if (n <= 2) return pts;
  std::vector<cplx> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {  // lower
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {  // upper
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
  return hull;
}

double point_segment_distance(cplx p, cplx a, cplx b) {
  const cplx ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = ((p.real() - a.real()) * ab.real() +
              (p.imag() - a.imag()) * ab.imag()) /
             len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace

ConvexRegion ConvexRegion::from_vertices(std::vector<cplx> vertices,
                                         std::optional<SupportSample> s) {
  if (vertices.empty())
    throw std::invalid_argument("ConvexRegion: no vertices");
  ConvexRegion r;
  r.vertices_ = vertices.size() <= 2 ? std::move(vertices)
                                     : convex_hull(std::move(vertices));
  if (r.vertices_.size() == 2 && r.vertices_[0] == r.vertices_[1])
    r.vertices_.resize(1);
  r.support_ = std::move(s);
  return r;
}

double ConvexRegion::support_value(double theta) const {
  const double c = std::cos(theta), s = std::sin(theta);
  double best = -std::numeric_limits<double>::infinity();
  for (const cplx& v : vertices_)
    best = std::max(best, c * v.real() - s * v.imag());
  return best;
}

double ConvexRegion::extent() const {
  double m = 0.0;
  for (const cplx& v : vertices_) m = std::max(m, std::abs(v));
  return m;
}

ConvexRegion region_from_support(const SupportSample& s) {
  const std::size_t m = s.thetas.size();
  if (m < 3 || s.values.size() != m)
    throw std::invalid_argument("region_from_support: need >= 3 directions");
  for (std::size_t j = 0; j < m; ++j) {
    if (!(s.thetas[j] >= 0.0) || !(s.thetas[j] < 2.0 * M_PI))
      throw std::invalid_argument("region_from_support: angle outside [0,2pi)");
    if (j > 0 && !(s.thetas[j] > s.thetas[j - 1]))
      throw std::invalid_argument(
          "region_from_support: angles must be strictly increasing");
  }

  double gmax = 0.0;
  for (double g : s.values) gmax = std::max(gmax, std::abs(g));
  const double tol = 1e-9 * std::max(1.0, gmax);

  std::vector<double> cs(m), sn(m);
  for (std::size_t j = 0; j < m; ++j) {
    cs[j] = std::cos(s.thetas[j]);
    sn[j] = std::sin(s.thetas[j]);
  }

  // candidate vertices: intersections of consecutive supporting lines,
  // skipping near-parallel pairs (< 1e-5 rad) to bound conditioning; every
  // half-plane still participates in the redundancy filter below
  constexpr double kMinAngleGap = 1e-5;
  std::vector<std::size_t> kept;
  kept.push_back(0);
  for (std::size_t j = 1; j < m; ++j)
    if (s.thetas[j] - s.thetas[kept.back()] >= kMinAngleGap) kept.push_back(j);
  if (kept.size() >= 2 &&
      (2.0 * M_PI - s.thetas[kept.back()]) + s.thetas[kept.front()] <
          kMinAngleGap)
    kept.pop_back();

  std::vector<cplx> candidates;
  candidates.reserve(kept.size());
  for (std::size_t idx = 0; idx < kept.size(); ++idx) {
    const std::size_t j = kept[idx];
    const std::size_t j2 = kept[(idx + 1) % kept.size()];
    // line j: cs[j]*x - sn[j]*y = g[j]
    const double det = -cs[j] * sn[j2] + sn[j] * cs[j2];
    if (std::abs(det) < 1e-12) continue;
    const double x = (-s.values[j] * sn[j2] + s.values[j2] * sn[j]) / det;
    const double y = (cs[j] * s.values[j2] - cs[j2] * s.values[j]) / det;
    candidates.emplace_back(x, y);
  }

  std::vector<cplx> feasible;
  feasible.reserve(candidates.size());
  for (const cplx& v : candidates) {
    bool ok = true;
    for (std::size_t i = 0; i < m; ++i)
      if (cs[i] * v.real() - sn[i] * v.imag() > s.values[i] + tol) {
        ok = false;
        break;
      }
    if (ok) feasible.push_back(v);
  }
  if (feasible.empty())
    throw std::runtime_error(
        "region_from_support: empty intersection (inconsistent sample)");

  return ConvexRegion::from_vertices(std::move(feasible), s);
}

double distance_to(const ConvexRegion& a, cplx p) {
  const auto& v = a.vertices();
  if (v.size() == 1) return std::abs(p - v[0]);
  if (v.size() == 2) return point_segment_distance(p, v[0], v[1]);
  bool inside = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const cplx& va = v[i];
    const cplx& vb = v[(i + 1) % v.size()];
    if (cross(va, vb, p) < 0.0) {
      inside = false;
      break;
    }
  }
  if (inside) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i)
    best = std::min(best,
                    point_segment_distance(p, v[i], v[(i + 1) % v.size()]));
  return best;
}

double hausdorff(const ConvexRegion& a, const ConvexRegion& b) {
  // distance-to-convex-set is convex, so the sup over a polygon is attained
  // at a vertex
  double d = 0.0;
  for (const cplx& v : a.vertices()) d = std::max(d, distance_to(b, v));
  for (const cplx& v : b.vertices()) d = std::max(d, distance_to(a, v));
  return d;
}

ConvexRegion minkowski_combine(const ConvexRegion& a, double s,
                               const ConvexRegion& b, double t) {
  if (s < 0.0 || t < 0.0)
    throw std::invalid_argument("minkowski_combine: coefficients must be >= 0");
  std::vector<double> grid;
  if (a.support() && b.support() &&
      a.support()->thetas == b.support()->thetas) {
    grid = a.support()->thetas;
    SupportSample out{grid, {}};
    out.values.resize(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j)
      out.values[j] = s * a.support()->values[j] + t * b.support()->values[j];
    return region_from_support(out);
  }
  grid = a.support() ? a.support()->thetas : uniform_angles(kDefaultDirections);
  SupportSample out{grid, {}};
  out.values.resize(grid.size());
  // exact polygon support functions replace interpolation of stored samples
  for (std::size_t j = 0; j < grid.size(); ++j)
    out.values[j] = s * a.support_value(grid[j]) + t * b.support_value(grid[j]);
  return region_from_support(out);
}

bool contains(const ConvexRegion& a, const ConvexRegion& b, double slack) {
  if (slack < 0.0) throw std::invalid_argument("contains: slack must be >= 0");
  for (const cplx& v : b.vertices())
    if (distance_to(a, v) > slack) return false;
  return true;
}

ConvexRegion transformed(const ConvexRegion& a, cplx w, cplx offset) {
  std::vector<cplx> verts;
  verts.reserve(a.vertices().size());
  for (const cplx& v : a.vertices()) verts.push_back(w * v + offset);
  std::optional<SupportSample> s;
  if (a.support() && w == cplx(1.0, 0.0)) {
    // pure translation keeps the sample grid valid
    s = a.support();
    for (std::size_t j = 0; j < s->thetas.size(); ++j)
      s->values[j] += std::cos(s->thetas[j]) * offset.real() -
                      std::sin(s->thetas[j]) * offset.imag();
  }
  return ConvexRegion::from_vertices(std::move(verts), std::move(s));
}

}  // namespace nrange
