#include "nrange/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace nrange {

SpectralModel SpectralModel::matrix(ComplexMatrix m) {
  SpectralModel s;
  s.kind_ = Kind::matrix;
  s.matrix_ = std::move(m);
  return s;
}

SpectralModel SpectralModel::atomic(std::vector<Atom> atoms) {
  if (atoms.empty()) throw std::invalid_argument("atomic model: no atoms");
  double total = 0.0;
  for (const Atom& a : atoms) {
    if (!(a.weight > 0.0))
      throw std::invalid_argument("atomic model: weights must be positive");
    total += a.weight;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument("atomic model: weights must sum to 1");
  SpectralModel s;
  s.kind_ = Kind::atomic;
  s.atoms_ = std::move(atoms);
  return s;
}

SpectralModel SpectralModel::haar_unitary() {
  SpectralModel s;
  s.kind_ = Kind::named;
  s.named_ = Named::haar_unitary;
  return s;
}

SpectralModel SpectralModel::semicircular(double mean, double variance) {
  if (!(variance >= 0.0))
    throw std::invalid_argument("semicircular: variance must be >= 0");
  SpectralModel s;
  s.kind_ = Kind::named;
  s.named_ = Named::semicircular;
  s.p1_ = mean;
  s.p2_ = variance;
  return s;
}

SpectralModel SpectralModel::circular() {
  SpectralModel s;
  s.kind_ = Kind::named;
  s.named_ = Named::circular;
  return s;
}

SpectralModel SpectralModel::tucci() {
  SpectralModel s;
  s.kind_ = Kind::named;
  s.named_ = Named::tucci;
  return s;
}

SpectralModel SpectralModel::dt_quasinilpotent() {
  SpectralModel s;
  s.kind_ = Kind::named;
  s.named_ = Named::dt_quasinilpotent;
  return s;
}

SpectralModel SpectralModel::elliptic(double psi) {
  if (!(psi > 0.0) || !(psi < M_PI / 2.0))
    throw std::invalid_argument("elliptic: psi must lie in (0, pi/2)");
  SpectralModel s;
  s.kind_ = Kind::named;
  s.named_ = Named::elliptic;
  s.p1_ = psi;
  return s;
}

bool SpectralModel::is_selfadjoint(double tol) const {
  switch (kind_) {
    case Kind::matrix:
      return matrix_->is_hermitian(tol);
    case Kind::atomic:
      for (const Atom& a : atoms_)
        if (std::abs(a.location.imag()) > tol) return false;
      return true;
    case Kind::named:
      return named_ == Named::semicircular;
  }
  return false;
}

cplx SpectralModel::trace() const {
  switch (kind_) {
    case Kind::matrix:
      return matrix_->normalized_trace();
    case Kind::atomic: {
      cplx t = 0.0;
      for (const Atom& a : atoms_) t += a.weight * a.location;
      return t;
    }
    case Kind::named:
      return named_ == Named::semicircular ? cplx(p1_) : cplx(0.0);
  }
  return 0.0;
}

double SpectralModel::norm_bound() const {
  switch (kind_) {
    case Kind::matrix:
      return operator_norm(*matrix_);
    case Kind::atomic: {
      double m = 0.0;
      for (const Atom& a : atoms_) m = std::max(m, std::abs(a.location));
      return m;
    }
    case Kind::named:
      switch (named_) {
        case Named::haar_unitary: return 1.0;
        case Named::semicircular: return std::abs(p1_) + 2.0 * std::sqrt(p2_);
        case Named::circular: return 2.0;
        case Named::tucci: return 1.0;
        case Named::dt_quasinilpotent: return std::sqrt(std::exp(1.0));
        case Named::elliptic: return 2.0;
      }
  }
  return 0.0;
}

std::string SpectralModel::describe() const {
  switch (kind_) {
    case Kind::matrix:
      return "matrix(" + std::to_string(matrix_->dim()) + ")";
    case Kind::atomic:
      return "atomic(" + std::to_string(atoms_.size()) + ")";
    case Kind::named:
      switch (named_) {
        case Named::haar_unitary: return "haar_unitary";
        case Named::semicircular: return "semicircular";
        case Named::circular: return "circular";
        case Named::tucci: return "tucci";
        case Named::dt_quasinilpotent: return "dt_quasinilpotent";
        case Named::elliptic: return "elliptic";
      }
  }
  return "?";
}

RealDistribution RealDistribution::atomic(
    std::vector<std::pair<double, double>> atoms) {
  if (atoms.empty())
    throw std::invalid_argument("RealDistribution::atomic: no atoms");
  double total = 0.0;
  for (const auto& [v, w] : atoms) {
    if (!(w > 0.0))
      throw std::invalid_argument(
          "RealDistribution::atomic: weights must be positive");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw std::invalid_argument(
        "RealDistribution::atomic: weights must sum to 1");
  std::sort(atoms.begin(), atoms.end());
  RealDistribution d;
  d.kind_ = Kind::atomic;
  d.atoms_ = std::move(atoms);
  return d;
}

RealDistribution RealDistribution::semicircle(double variance, double shift) {
  if (!(variance >= 0.0))
    throw std::invalid_argument("semicircle: variance must be >= 0");
  if (variance == 0.0) return atomic({{shift, 1.0}});
  RealDistribution d;
  d.kind_ = Kind::semicircle;
  d.variance_ = variance;
  d.shift_ = shift;
  return d;
}

RealDistribution RealDistribution::cosine_pushforward() {
  RealDistribution d;
  d.kind_ = Kind::cosine_pushforward;
  return d;
}

RealDistribution RealDistribution::linear_tucci() {
  RealDistribution d;
  d.kind_ = Kind::linear_tucci;
  return d;
}

double RealDistribution::support_min() const {
  switch (kind_) {
    case Kind::atomic: return atoms_.front().first;
    case Kind::semicircle: return shift_ - 2.0 * std::sqrt(variance_);
    case Kind::cosine_pushforward: return -1.0;
    case Kind::linear_tucci: return -0.5;
  }
  return 0.0;
}

double RealDistribution::support_max() const {
  switch (kind_) {
    case Kind::atomic: return atoms_.back().first;
    case Kind::semicircle: return shift_ + 2.0 * std::sqrt(variance_);
    case Kind::cosine_pushforward: return 1.0;
    case Kind::linear_tucci: return 0.5;
  }
  return 0.0;
}

double semicircle_unit_tail(double u) {
  if (u <= -1.0) return 1.0;
  if (u >= 1.0) return 0.0;
  return 0.5 - (u * std::sqrt(1.0 - u * u) + std::asin(u)) / M_PI;
}

double semicircle_unit_quantile(double s) {
  double lo = -1.0, hi = 1.0;
  // tail is strictly decreasing: tail(lo)=1 >= s >= tail(hi)=0
  for (int it = 0; it < 60 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (semicircle_unit_tail(mid) > s)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

// midpoint-quantile tables for the parameter-free laws, memoized per
// resolution (scaling/shifting handles the parametrized cases exactly)
const std::vector<double>& unit_semicircle_table(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<double>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& tbl = cache[n];
  if (tbl.empty()) {
    tbl.resize(n);
    for (int k = 0; k < n; ++k)
      tbl[k] = semicircle_unit_quantile((k + 0.5) / n);
  }
  return tbl;
}

const std::vector<double>& cosine_table(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<double>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& tbl = cache[n];
  if (tbl.empty()) {
    tbl.resize(n);
    for (int k = 0; k < n; ++k) tbl[k] = std::cos(M_PI * (k + 0.5) / n);
  }
  return tbl;
}

StepFunction atomic_quantile(const std::vector<std::pair<double, double>>& atoms) {
  // atoms ascending; eigenvalue function lists them descending
  std::vector<std::pair<double, double>> pieces;
  pieces.reserve(atoms.size());
  for (auto it = atoms.rbegin(); it != atoms.rend(); ++it)
    pieces.emplace_back(it->first, it->second);
  return rearrange(StepFunction::from_pieces(pieces));
}

}  // namespace

StepFunction quantile_step(const RealDistribution& d, int resolution) {
  if (resolution < 1)
    throw std::invalid_argument("quantile_step: resolution must be >= 1");
  switch (d.kind()) {
    case RealDistribution::Kind::atomic:
      return atomic_quantile(d.atoms());
    case RealDistribution::Kind::semicircle: {
      const auto& tbl = unit_semicircle_table(resolution);
      const double scale = 2.0 * std::sqrt(d.variance());
      std::vector<double> vals(tbl.size());
      for (std::size_t k = 0; k < tbl.size(); ++k)
        vals[k] = d.shift() + scale * tbl[k];
      return StepFunction::uniform(std::move(vals));
    }
    case RealDistribution::Kind::cosine_pushforward: {
      const auto& tbl = cosine_table(resolution);
      return StepFunction::uniform(tbl);
    }
    case RealDistribution::Kind::linear_tucci: {
      std::vector<double> vals(resolution);
      for (int k = 0; k < resolution; ++k)
        vals[k] = 0.5 * (1.0 - 2.0 * (k + 0.5) / resolution);
      return StepFunction::uniform(std::move(vals));
    }
  }
  throw std::invalid_argument("quantile_step: unknown distribution");
}

RealDistribution real_part_distribution(const SpectralModel& m, double theta) {
  switch (m.kind()) {
    case SpectralModel::Kind::matrix: {
      const auto eig =
          hermitian_eigenvalues(hermitian_part(m.matrix_value(), theta));
      const double w = 1.0 / static_cast<double>(eig.eigenvalues.size());
      std::vector<std::pair<double, double>> atoms;
      atoms.reserve(eig.eigenvalues.size());
      for (double v : eig.eigenvalues) atoms.emplace_back(v, w);
      return RealDistribution::atomic(std::move(atoms));
    }
    case SpectralModel::Kind::atomic: {
      const double c = std::cos(theta), s = std::sin(theta);
      std::vector<std::pair<double, double>> atoms;
      atoms.reserve(m.atoms().size());
      for (const Atom& a : m.atoms())
        atoms.emplace_back(c * a.location.real() - s * a.location.imag(),
                           a.weight);
      return RealDistribution::atomic(std::move(atoms));
    }
    case SpectralModel::Kind::named:
      switch (m.named()) {
        case SpectralModel::Named::haar_unitary:
          return RealDistribution::cosine_pushforward();
        case SpectralModel::Named::semicircular: {
          const double c = std::cos(theta);
          return RealDistribution::semicircle(m.variance() * c * c,
                                              m.mean() * c);
        }
        case SpectralModel::Named::circular:
          return RealDistribution::semicircle(0.5);
        case SpectralModel::Named::tucci:
          return RealDistribution::linear_tucci();
        case SpectralModel::Named::dt_quasinilpotent:
          return RealDistribution::semicircle(0.25);
        case SpectralModel::Named::elliptic: {
          const double cp = std::cos(m.psi()), sp = std::sin(m.psi());
          const double ct = std::cos(theta), st = std::sin(theta);
          return RealDistribution::semicircle(cp * cp * ct * ct +
                                              sp * sp * st * st);
        }
      }
  }
  throw std::invalid_argument("real_part_distribution: unknown model");
}

}  // namespace nrange
