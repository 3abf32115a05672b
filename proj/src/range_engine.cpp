#include "nrange/range_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <optional>
#include <stdexcept>

#include "nrange/parallel.hpp"

namespace nrange {

WeightSpec WeightSpec::alpha(double a) {
  if (!(a > 0.0) || a > 1.0)
    throw std::invalid_argument("WeightSpec: alpha must lie in (0,1]");
  return WeightSpec(Kind::alpha, a, StepFunction::indicator_weight(a));
}

WeightSpec WeightSpec::step(StepFunction lambda_c) {
  return WeightSpec(Kind::step, 0.0, rearrange(lambda_c));
}

namespace {

const StepFunction& positive_weight(const WeightSpec& w) {
  if (w.lambda_c().min_value() < 0.0)
    throw std::invalid_argument(
        "weight must be positive; translate C first (V_{C+bI} = V_C + b tau)");
  return w.lambda_c();
}

StepFunction canonical_sorted(const StepFunction& f) {
  return f.is_sorted() ? f : rearrange(f);
}

}  // namespace

Interval selfadjoint_range(const StepFunction& lambda_t, const WeightSpec& w) {
  const StepFunction& lc = positive_weight(w);
  const StepFunction lt = canonical_sorted(lambda_t);
  return Interval{pairing_integral(lt, lc, true),
                  pairing_integral(lt, lc, false)};
}

double support_value(const SpectralModel& m, const WeightSpec& w, double theta,
                     int resolution) {
  const StepFunction& lc = positive_weight(w);
  return pairing_integral(
      quantile_step(real_part_distribution(m, theta), resolution), lc, false);
}

namespace {

// directions where the greedy atom order changes: Re(e^{i theta}(a - b)) = 0
std::vector<double> bisector_angles(const std::vector<Atom>& atoms) {
  std::vector<double> angles;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      const cplx d = atoms[i].location - atoms[j].location;
      if (std::abs(d) < 1e-14) continue;
      double t = std::atan2(d.real(), d.imag());
      if (t < 0.0) t += 2.0 * M_PI;
      angles.push_back(t);
      double t2 = t + M_PI;
      if (t2 >= 2.0 * M_PI) t2 -= 2.0 * M_PI;
      angles.push_back(t2);
    }
  return angles;
}

std::vector<double> merge_angles(std::vector<double> base,
                                 std::vector<double> extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  std::sort(base.begin(), base.end());
  std::vector<double> out;
  out.reserve(base.size());
  for (double t : base)
    if (out.empty() || t - out.back() > 1e-12) out.push_back(t);
  while (out.size() > 1 && out.back() >= 2.0 * M_PI) out.pop_back();
  return out;
}

// greedy fractional knapsack: fill t_k <= w_k in order of decreasing
// Re(e^{i theta} atom), stable by atom index; returns the supporting point
cplx knapsack_point(const std::vector<Atom>& atoms, double alpha,
                    double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  std::vector<std::size_t> order(atoms.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ka = c * atoms[a].location.real() - s * atoms[a].location.imag();
    const double kb = c * atoms[b].location.real() - s * atoms[b].location.imag();
    return ka > kb;
  });
  cplx acc = 0.0;
  double remaining = alpha;
  for (std::size_t idx : order) {
    if (remaining <= 0.0) break;
    const double take = std::min(atoms[idx].weight, remaining);
    acc += take * atoms[idx].location;
    remaining -= take;
  }
  return acc / alpha;
}

// FNV-1a over a byte stream
struct Digest {
  std::uint64_t h = 1469598103934665603ULL;
  void bytes(const void* p, std::size_t n) {
    const auto* b = static_cast<const unsigned char*>(p);
    for (std::size_t i = 0; i < n; ++i) {
      h ^= b[i];
      h *= 1099511628211ULL;
    }
  }
  void real(double v) { bytes(&v, sizeof v); }
  void complex(cplx z) {
    real(z.real());
    real(z.imag());
  }
  void tag(char c) { bytes(&c, 1); }
  std::string hex() const {
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
  }
};

StepFunction selfadjoint_eigenfunction(const SpectralModel& m,
                                       int resolution) {
  switch (m.kind()) {
    case SpectralModel::Kind::matrix:
      return eigenvalue_function_of_matrix(m.matrix_value(), 0.0);
    default:
      return quantile_step(real_part_distribution(m, 0.0), resolution);
  }
}

}  // namespace

std::string digest_of(const SpectralModel& m) {
  Digest d;
  switch (m.kind()) {
    case SpectralModel::Kind::matrix: {
      d.tag('m');
      const auto& mt = m.matrix_value();
      d.real(static_cast<double>(mt.dim()));
      for (const cplx& z : mt.data()) d.complex(z);
      break;
    }
    case SpectralModel::Kind::atomic:
      d.tag('a');
      for (const Atom& a : m.atoms()) {
        d.complex(a.location);
        d.real(a.weight);
      }
      break;
    case SpectralModel::Kind::named:
      d.tag('n');
      d.tag(static_cast<char>(m.named()));
      d.real(m.mean());
      d.real(m.variance());
      break;
  }
  return d.hex();
}

std::string digest_of(const WeightSpec& w) {
  Digest d;
  if (w.is_alpha()) {
    d.tag('A');
    d.real(w.alpha_value());
  } else {
    d.tag('S');
    for (double b : w.lambda_c().breakpoints()) d.real(b);
    for (double v : w.lambda_c().values()) d.real(v);
  }
  return d.hex();
}

RangeReport compute_range(const SpectralModel& m, const WeightSpec& w,
                          int directions, int resolution) {
  if (directions < 3)
    throw std::invalid_argument("compute_range: need >= 3 directions");
  if (resolution < 1)
    throw std::invalid_argument("compute_range: resolution must be >= 1");

  RangeReport report;
  report.directions = directions;
  report.resolution = resolution;
  report.operator_digest = digest_of(m);
  report.weight_digest = digest_of(w);

  // translate-compute-translate-back protocol for weights with negative parts
  const double shift = std::max(0.0, -w.lambda_c().min_value());
  const WeightSpec positive =
      shift > 0.0 ? WeightSpec::step(w.lambda_c().shifted(shift)) : w;
  const cplx trace_term = shift * m.trace();

  if (m.is_selfadjoint()) {
    report.is_degenerate_interval = true;
    const StepFunction lt = selfadjoint_eigenfunction(m, resolution);
    Interval iv = selfadjoint_range(lt, positive);
    iv.lo -= trace_term.real();
    iv.hi -= trace_term.real();
    report.interval = iv;
    std::vector<cplx> verts{cplx(iv.lo, 0.0)};
    if (iv.hi != iv.lo) verts.emplace_back(iv.hi, 0.0);
    report.region = ConvexRegion::from_vertices(std::move(verts));
    return report;
  }

  std::vector<double> grid = uniform_angles(directions);
  if (m.kind() == SpectralModel::Kind::atomic)
    grid = merge_angles(std::move(grid), bisector_angles(m.atoms()));

  const std::size_t count = grid.size();
  std::vector<RealDistribution> dists;
  dists.reserve(count);
  {
    // matrix models pay one eigensolve per direction here
    std::vector<std::optional<RealDistribution>> slots(count);
    parallel_for(count, [&](std::size_t j) {
      slots[j] = real_part_distribution(m, grid[j]);
    });
    for (auto& s : slots) dists.push_back(std::move(*s));
  }

  // memoize equal distributions (rotation-invariant models repeat the same
  // law at every angle; this detects equality, it does not assume symmetry)
  std::vector<std::size_t> group(count);
  std::vector<std::size_t> unique_ix;
  for (std::size_t j = 0; j < count; ++j) {
    std::size_t g = unique_ix.size();
    for (std::size_t u = 0; u < unique_ix.size(); ++u)
      if (dists[unique_ix[u]] == dists[j]) {
        g = u;
        break;
      }
    if (g == unique_ix.size()) unique_ix.push_back(j);
    group[j] = g;
  }

  const StepFunction& lc = positive.lambda_c();
  std::vector<double> unique_g(unique_ix.size());
  parallel_for(unique_ix.size(), [&](std::size_t u) {
    unique_g[u] =
        pairing_integral(quantile_step(dists[unique_ix[u]], resolution), lc,
                         false);
  });

  SupportSample sample;
  sample.thetas = grid;
  sample.values.resize(count);
  for (std::size_t j = 0; j < count; ++j)
    sample.values[j] = unique_g[group[j]];

  ConvexRegion region = region_from_support(sample);
  if (shift > 0.0) region = transformed(region, 1.0, -trace_term);
  report.region = std::move(region);
  return report;
}

ConvexRegion normal_range_exact(const std::vector<Atom>& atoms, double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::domain_error("normal_range_exact: alpha must lie in (0,1]");
  double total = 0.0;
  for (const Atom& a : atoms) {
    if (!(a.weight > 0.0))
      throw std::invalid_argument("normal_range_exact: weights must be > 0");
    total += a.weight;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("normal_range_exact: weights must sum to 1");

  const std::vector<double> critical = merge_angles(bisector_angles(atoms), {});
  const std::vector<double> grid =
      merge_angles(uniform_angles(kDefaultDirections), critical);

  SupportSample sample;
  sample.thetas = grid;
  sample.values.resize(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const cplx z = knapsack_point(atoms, alpha, grid[j]);
    sample.values[j] = std::cos(grid[j]) * z.real() -
                       std::sin(grid[j]) * z.imag();
  }

  // vertices: on each arc between consecutive critical directions the greedy
  // filling is constant, so the supporting point at the arc midpoint is the
  // exact polytope vertex
  std::vector<cplx> verts;
  if (critical.empty()) {
    verts.push_back(knapsack_point(atoms, alpha, 0.0));
  } else {
    const std::size_t nc = critical.size();
    verts.reserve(nc);
    for (std::size_t j = 0; j < nc; ++j) {
      const double a = critical[j];
      const double b = j + 1 < nc ? critical[j + 1] : critical[0] + 2.0 * M_PI;
      double mid = 0.5 * (a + b);
      if (mid >= 2.0 * M_PI) mid -= 2.0 * M_PI;
      verts.push_back(knapsack_point(atoms, alpha, mid));
    }
  }
  return ConvexRegion::from_vertices(std::move(verts), std::move(sample));
}

Interval range_from_alpha_family(
    const std::function<double(double)>& alpha_sup, const StepFunction& weight) {
  const StepFunction w = rearrange(weight);
  if (w.min_value() < 0.0)
    throw std::invalid_argument(
        "range_from_alpha_family: weight must be positive");
  const std::size_t n = w.piece_count();
  std::vector<double> increments(n);
  double prev = 0.0;  // x * sup V_x at x = 0
  for (std::size_t k = 0; k < n; ++k) {
    const double x = w.breakpoints()[k + 1];
    const double cur = x * alpha_sup(x);
    increments[k] = cur - prev;
    prev = cur;
  }
  Interval iv;
  for (std::size_t k = 0; k < n; ++k) {
    iv.hi += w.values()[k] * increments[k];
    iv.lo += w.values()[n - 1 - k] * increments[k];
  }
  return iv;
}

}  // namespace nrange
