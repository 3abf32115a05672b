#include "nrange/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "nrange/kernels.hpp"

namespace nrange {

namespace {

bool non_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return true;
}

}  // namespace

StepFunction::StepFunction(std::vector<double> breakpoints,
                           std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (values_.empty() || breakpoints_.size() != values_.size() + 1)
    throw std::invalid_argument("StepFunction: size mismatch");
  if (breakpoints_.front() != 0.0 || breakpoints_.back() != 1.0)
    throw std::invalid_argument("StepFunction: breakpoints must span [0,1]");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] > breakpoints_[i - 1]))
      throw std::invalid_argument(
          "StepFunction: breakpoints must be strictly increasing");
  for (double b : breakpoints_)
    if (!std::isfinite(b))
      throw std::invalid_argument("StepFunction: non-finite breakpoint");
  for (double v : values_)
    if (!std::isfinite(v))
      throw std::invalid_argument("StepFunction: non-finite value");
  sorted_ = non_increasing(values_);
}

StepFunction StepFunction::constant(double c) {
  return StepFunction({0.0, 1.0}, {c});
}

StepFunction StepFunction::uniform(std::vector<double> values) {
  const std::size_t n = values.size();
  if (n == 0) throw std::invalid_argument("StepFunction::uniform: empty");
  std::vector<double> bp(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    bp[k] = static_cast<double>(k) / static_cast<double>(n);
  StepFunction f(std::move(bp), std::move(values));
  f.uniform_ = true;
  return f;
}

StepFunction StepFunction::from_pieces(
    const std::vector<std::pair<double, double>>& pieces) {
  if (pieces.empty())
    throw std::invalid_argument("StepFunction::from_pieces: empty");
  std::vector<double> bp, vals;
  bp.reserve(pieces.size() + 1);
  vals.reserve(pieces.size());
  bp.push_back(0.0);
  double x = 0.0;
  for (const auto& [v, w] : pieces) {
    if (!(w > 0.0))
      throw std::invalid_argument(
          "StepFunction::from_pieces: widths must be positive");
    x += w;
    bp.push_back(x);
    vals.push_back(v);
  }
  if (std::abs(x - 1.0) > 1e-9)
    throw std::invalid_argument(
        "StepFunction::from_pieces: widths must sum to 1");
  bp.back() = 1.0;
  return StepFunction(std::move(bp), std::move(vals));
}

StepFunction StepFunction::indicator_weight(double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0)
    throw std::invalid_argument("indicator_weight: alpha must lie in (0,1]");
  if (alpha == 1.0) return constant(1.0);
  return StepFunction({0.0, alpha, 1.0}, {1.0 / alpha, 0.0});
}

double StepFunction::value_at(double s) const {
  if (!(s >= 0.0) || s >= 1.0)
    throw std::domain_error("StepFunction::value_at: s outside [0,1)");
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), s);
  std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  if (idx >= values_.size()) idx = values_.size() - 1;
  return values_[idx];
}

double StepFunction::min_value() const {
  return *std::min_element(values_.begin(), values_.end());
}

double StepFunction::max_value() const {
  return *std::max_element(values_.begin(), values_.end());
}

double StepFunction::total_integral() const {
  double acc = 0.0;
  for (std::size_t k = 0; k < values_.size(); ++k)
    acc += values_[k] * piece_width(k);
  return acc;
}

StepFunction StepFunction::shifted(double b) const {
  std::vector<double> vals(values_);
  for (double& v : vals) v += b;
  StepFunction f(breakpoints_, std::move(vals));
  f.uniform_ = uniform_;
  return f;
}

StepFunction StepFunction::scaled(double a) const {
  std::vector<double> vals(values_);
  for (double& v : vals) v *= a;
  StepFunction f(breakpoints_, std::move(vals));
  f.uniform_ = uniform_;
  return f;
}

StepFunction rearrange(const StepFunction& f) {
  const std::size_t n = f.piece_count();
  std::vector<std::pair<double, double>> pieces(n);
  for (std::size_t k = 0; k < n; ++k)
    pieces[k] = {f.values()[k], f.piece_width(k)};
  std::stable_sort(pieces.begin(), pieces.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  // merge exactly-equal values into one piece: canonical form
  std::vector<std::pair<double, double>> merged;
  merged.reserve(n);
  for (const auto& p : pieces) {
    if (!merged.empty() && merged.back().first == p.first)
      merged.back().second += p.second;
    else
      merged.push_back(p);
  }
  return StepFunction::from_pieces(merged);
}

StepFunction reversed(const StepFunction& f) {
  const std::size_t n = f.piece_count();
  std::vector<std::pair<double, double>> pieces(n);
  for (std::size_t k = 0; k < n; ++k)
    pieces[k] = {f.values()[n - 1 - k], f.piece_width(n - 1 - k)};
  StepFunction g = StepFunction::from_pieces(pieces);
  g.uniform_ = f.uniform_;
  return g;
}

double partial_integral(const StepFunction& f, double t) {
  if (!(t >= 0.0) || !(t <= 1.0))
    throw std::domain_error("partial_integral: t outside [0,1]");
  double acc = 0.0;
  const auto& bp = f.breakpoints();
  for (std::size_t k = 0; k < f.piece_count(); ++k) {
    if (t <= bp[k]) break;
    acc += f.values()[k] * (std::min(t, bp[k + 1]) - bp[k]);
  }
  return acc;
}

MajorizationVerdict majorizes(const StepFunction& f, const StepFunction& g,
                              double tolerance) {
  const StepFunction fs = rearrange(f);
  const StepFunction gs = rearrange(g);
  MajorizationVerdict verdict;

  // walk the merged breakpoint grid accumulating both partial integrals
  const auto& fb = fs.breakpoints();
  const auto& gb = gs.breakpoints();
  std::size_t i = 0, j = 0;
  double x = 0.0, intf = 0.0, intg = 0.0;
  double worst = -std::numeric_limits<double>::infinity();
  while (i < fs.piece_count() && j < gs.piece_count()) {
    const double nx = std::min(fb[i + 1], gb[j + 1]);
    intf += fs.values()[i] * (nx - x);
    intg += gs.values()[j] * (nx - x);
    const double gap = intg - intf;  // positive = violation
    if (gap > worst) {
      worst = gap;
      verdict.worst_t = nx;
    }
    if (fb[i + 1] == nx) ++i;
    if (gb[j + 1] == nx) ++j;
    x = nx;
  }
  verdict.total_integral_gap = intf - intg;
  verdict.majorizes =
      worst <= tolerance && std::abs(verdict.total_integral_gap) <= tolerance;
  return verdict;
}

namespace {

// integral of a uniform-grid step function over [a,b), exact on cell algebra
double uniform_range_integral(const StepFunction& f, double a, double b) {
  const std::size_t n = f.piece_count();
  const double* v = f.values().data();
  if (b <= a) return 0.0;
  auto cell_of = [&](double s) {
    auto k = static_cast<std::ptrdiff_t>(s * static_cast<double>(n));
    if (k < 0) k = 0;
    if (k >= static_cast<std::ptrdiff_t>(n)) k = static_cast<std::ptrdiff_t>(n) - 1;
    // fix boundary rounding against the exact breakpoints
    const auto& bp = f.breakpoints();
    while (k > 0 && s < bp[k]) --k;
    while (k + 1 < static_cast<std::ptrdiff_t>(n + 1) && s >= bp[k + 1]) ++k;
    return static_cast<std::size_t>(k);
  };
  const auto& bp = f.breakpoints();
  std::size_t ka = cell_of(a);
  std::size_t kb = cell_of(b < 1.0 ? b : std::nextafter(1.0, 0.0));
  if (b >= 1.0) kb = n - 1;
  if (ka == kb) return v[ka] * (b - a);
  double acc = v[ka] * (bp[ka + 1] - a);
  if (kb > ka + 1)
    acc += kernels::sum(v + ka + 1, kb - ka - 1) / static_cast<double>(n);
  acc += v[kb] * (b - bp[kb]);
  return acc;
}

}  // namespace

double pairing_integral(const StepFunction& f, const StepFunction& g,
                        bool rev) {
  if (rev) return pairing_integral(f, reversed(g), false);

  // fast path: f on a uniform grid, g with few pieces (the engine's sweep
  // pairs resolution-cell quantiles against 1-3 piece weights)
  if (f.is_uniform() && g.piece_count() <= 4 && f.piece_count() >= 32) {
    double acc = 0.0;
    for (std::size_t k = 0; k < g.piece_count(); ++k) {
      const double gv = g.values()[k];
      if (gv == 0.0) continue;
      acc += gv * uniform_range_integral(f, g.breakpoints()[k],
                                         g.breakpoints()[k + 1]);
    }
    return acc;
  }

  // same uniform grid: plain dot product
  if (f.is_uniform() && g.is_uniform() && f.piece_count() == g.piece_count()) {
    return kernels::dot(f.values().data(), g.values().data(),
                        f.piece_count()) /
           static_cast<double>(f.piece_count());
  }

  const auto& fb = f.breakpoints();
  const auto& gb = g.breakpoints();
  std::size_t i = 0, j = 0;
  double x = 0.0, acc = 0.0;
  while (i < f.piece_count() && j < g.piece_count()) {
    const double nx = std::min(fb[i + 1], gb[j + 1]);
    acc += f.values()[i] * g.values()[j] * (nx - x);
    if (fb[i + 1] == nx) ++i;
    if (gb[j + 1] == nx) ++j;
    x = nx;
  }
  return acc;
}

StepFunction pointwise_combine(const StepFunction& f, const StepFunction& g,
                               double t) {
  const auto& fb = f.breakpoints();
  const auto& gb = g.breakpoints();
  std::vector<double> bp;
  std::vector<double> vals;
  bp.reserve(fb.size() + gb.size());
  vals.reserve(fb.size() + gb.size());
  bp.push_back(0.0);
  std::size_t i = 0, j = 0;
  while (i < f.piece_count() && j < g.piece_count()) {
    vals.push_back(t * f.values()[i] + (1.0 - t) * g.values()[j]);
    const double nx = std::min(fb[i + 1], gb[j + 1]);
    bp.push_back(nx);
    if (fb[i + 1] == nx) ++i;
    if (gb[j + 1] == nx) ++j;
  }
  return StepFunction(std::move(bp), std::move(vals));
}

}  // namespace nrange
