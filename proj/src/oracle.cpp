#include "nrange/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "nrange/kernels.hpp"

namespace nrange::oracle {

namespace {

// orthonormalize k Gaussian columns in place (two Gram-Schmidt passes);
// identical in distribution to the first k columns of a Haar unitary
void random_frame(std::size_t n, std::size_t k, Rng& rng,
                  std::vector<cplx>& cols) {
  cols.resize(n * k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) cols[j * n + i] = rng.complex_normal();
  for (std::size_t j = 0; j < k; ++j) {
    cplx* v = cols.data() + j * n;
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t m = 0; m < j; ++m) {
        const cplx* q = cols.data() + m * n;
        cplx proj = 0.0;
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(q[i]) * v[i];
        for (std::size_t i = 0; i < n; ++i) v[i] -= proj * q[i];
      }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm2 += std::norm(v[i]);
    const double r = std::sqrt(norm2);
    for (std::size_t i = 0; i < n; ++i) v[i] /= r;
  }
}

}  // namespace

OracleCloud sample_projection_cloud(const ComplexMatrix& t, std::size_t k,
                                    std::size_t count, std::uint64_t seed) {
  const std::size_t n = t.dim();
  if (k < 1 || k > n)
    throw std::invalid_argument("sample_projection_cloud: rank outside [1,n]");
  if (count < 1)
    throw std::invalid_argument("sample_projection_cloud: count must be >= 1");

  OracleCloud cloud;
  cloud.kind = OracleCloud::Kind::projection;
  cloud.n = n;
  cloud.k = k;
  cloud.sample_count = count;
  cloud.seed = seed;
  cloud.points.resize(count);

  Rng rng(seed);
  std::vector<cplx> cols;
  std::vector<cplx> tu(n);
  // (1/alpha) tau(T P) = (1/k) sum_j u_j^* T u_j
  for (std::size_t sample = 0; sample < count; ++sample) {
    random_frame(n, k, rng, cols);
    cplx acc = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      const cplx* u = cols.data() + j * n;
      for (std::size_t i = 0; i < n; ++i) {
        cplx w = 0.0;
        for (std::size_t l = 0; l < n; ++l) w += t.at(i, l) * u[l];
        acc += std::conj(u[i]) * w;
      }
    }
    cloud.points[sample] = acc / static_cast<double>(k);
  }
  return cloud;
}

OracleCloud sample_orbit_cloud(const ComplexMatrix& t, const ComplexMatrix& c,
                               std::size_t count, std::uint64_t seed) {
  const std::size_t n = t.dim();
  if (c.dim() != n)
    throw std::invalid_argument("sample_orbit_cloud: dimension mismatch");
  if (!c.is_hermitian(1e-12))
    throw std::invalid_argument("sample_orbit_cloud: C must be Hermitian");
  if (count < 1)
    throw std::invalid_argument("sample_orbit_cloud: count must be >= 1");

  OracleCloud cloud;
  cloud.kind = OracleCloud::Kind::unitary_orbit;
  cloud.n = n;
  cloud.k = 0;
  cloud.sample_count = count;
  cloud.seed = seed;
  cloud.points.resize(count);

  Rng rng(seed);
  for (std::size_t sample = 0; sample < count; ++sample) {
    const ComplexMatrix u = random_unitary(n, rng);
    const ComplexMatrix x = multiply(multiply(u.adjoint(), c), u);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc += t.at(i, j) * x.at(j, i);
    cloud.points[sample] = acc / static_cast<double>(n);
  }
  return cloud;
}

std::pair<double, double> permutation_pairing_oracle(
    const std::vector<double>& f, const std::vector<double>& g) {
  if (f.size() != g.size())
    throw std::invalid_argument("permutation_pairing_oracle: length mismatch");
  if (f.empty() || f.size() > 8)
    throw std::invalid_argument(
        "permutation_pairing_oracle: length must lie in [1,8]");
  std::vector<double> p(g);
  std::sort(p.begin(), p.end());
  double best = -std::numeric_limits<double>::infinity();
  double worst = std::numeric_limits<double>::infinity();
  do {
    double acc = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += f[i] * p[i];
    best = std::max(best, acc);
    worst = std::min(worst, acc);
  } while (std::next_permutation(p.begin(), p.end()));
  const double n = static_cast<double>(f.size());
  return {best / n, worst / n};
}

OracleCloud deterministic_vector_sweep(const ComplexMatrix& t, int density) {
  const std::size_t n = t.dim();
  if (n != 2 && n != 3)
    throw std::invalid_argument("deterministic_vector_sweep: n must be 2 or 3");
  if (density < 2)
    throw std::invalid_argument("deterministic_vector_sweep: density < 2");

  OracleCloud cloud;
  cloud.kind = OracleCloud::Kind::projection;
  cloud.n = n;
  cloud.k = 1;
  cloud.seed = 0;

  auto value = [&](const cplx* u) {
    cplx acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        acc += std::conj(u[i]) * t.at(i, j) * u[j];
    return acc;
  };

  const int da = density;      // polar angles in [0, pi/2]
  const int dp = 2 * density;  // phases in [0, 2pi)
  if (n == 2) {
    for (int ia = 0; ia <= da; ++ia) {
      const double a = 0.5 * M_PI * ia / da;
      const double ca = std::cos(a), sa = std::sin(a);
      for (int ip = 0; ip < dp; ++ip) {
        const double phi = 2.0 * M_PI * ip / dp;
        const cplx u[2] = {cplx(ca, 0.0), std::polar(sa, phi)};
        cloud.points.push_back(value(u));
      }
    }
  } else {
    for (int ia = 0; ia <= da; ++ia) {
      const double a = 0.5 * M_PI * ia / da;
      for (int ib = 0; ib <= da; ++ib) {
        const double b = 0.5 * M_PI * ib / da;
        const double u0 = std::cos(a);
        const double r1 = std::sin(a) * std::cos(b);
        const double r2 = std::sin(a) * std::sin(b);
        for (int ip1 = 0; ip1 < dp; ++ip1) {
          const double phi1 = 2.0 * M_PI * ip1 / dp;
          for (int ip2 = 0; ip2 < dp; ++ip2) {
            const double phi2 = 2.0 * M_PI * ip2 / dp;
            const cplx u[3] = {cplx(u0, 0.0), std::polar(r1, phi1),
                               std::polar(r2, phi2)};
            cloud.points.push_back(value(u));
          }
        }
      }
    }
  }
  cloud.sample_count = cloud.points.size();
  return cloud;
}

double max_violation(const OracleCloud& cloud, const ConvexRegion& region) {
  double worst = 0.0;
  for (const cplx& p : cloud.points)
    worst = std::max(worst, distance_to(region, p));
  return worst;
}

double directional_deficit(const OracleCloud& cloud, const SupportSample& s) {
  const std::size_t m = cloud.points.size();
  std::vector<double> xs(m), ys(m);
  for (std::size_t i = 0; i < m; ++i) {
    xs[i] = cloud.points[i].real();
    ys[i] = cloud.points[i].imag();
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < s.thetas.size(); ++j) {
    const double reach = kernels::directional_max(
        xs.data(), ys.data(), m, std::cos(s.thetas[j]), -std::sin(s.thetas[j]));
    worst = std::max(worst, s.values[j] - reach);
  }
  return worst;
}

}  // namespace nrange::oracle
