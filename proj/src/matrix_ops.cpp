#include "nrange/matrix_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nrange {

ComplexMatrix::ComplexMatrix(std::size_t n) : n_(n), a_(n * n, cplx(0.0)) {
  if (n == 0) throw std::invalid_argument("ComplexMatrix: dimension 0");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<cplx>& d) {
  ComplexMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = std::conj(at(j, i));
  return m;
}

cplx ComplexMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

cplx ComplexMatrix::normalized_trace() const {
  return trace() / static_cast<double>(n_);
}

double ComplexMatrix::frobenius_norm() const {
  double acc = 0.0;
  for (const cplx& z : a_) acc += std::norm(z);
  return std::sqrt(acc);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : a_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  const double scale = std::max(1.0, max_abs());
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i; j < n_; ++j)
      if (std::abs(at(i, j) - std::conj(at(j, i))) > tol * scale) return false;
  return true;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("multiply: dim mismatch");
  const std::size_t n = a.dim();
  ComplexMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a.at(i, k);
      if (aik == cplx(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("add: dim mismatch");
  ComplexMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

ComplexMatrix scale(const ComplexMatrix& a, cplx w) {
  ComplexMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c.at(i, j) = w * a.at(i, j);
  return c;
}

ComplexMatrix hermitian_part(const ComplexMatrix& t, double theta) {
  const std::size_t n = t.dim();
  const cplx phase = std::polar(1.0, theta);
  ComplexMatrix h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const cplx v = 0.5 * (phase * t.at(i, j) + std::conj(phase * t.at(j, i)));
      h.at(i, j) = v;
      h.at(j, i) = std::conj(v);
    }
  for (std::size_t i = 0; i < n; ++i) h.at(i, i) = h.at(i, i).real();
  return h;
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      if (i != j) acc += std::norm(a.at(i, j));
  return std::sqrt(acc);
}

}  // namespace

HermitianEigen hermitian_eigenvalues(const ComplexMatrix& h) {
  if (!h.is_hermitian(1e-12))
    throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian");
  const std::size_t n = h.dim();
  ComplexMatrix a = h;
  // enforce exact conjugate symmetry before iterating
  for (std::size_t i = 0; i < n; ++i) {
    a.at(i, i) = a.at(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
      a.at(i, j) = v;
      a.at(j, i) = std::conj(v);
    }
  }

  const double tol = 1e-12 * std::max(h.frobenius_norm(), 1e-300);
  for (int sweep = 0; sweep < 100 && off_diagonal_norm(a) > tol; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a.at(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const cplx phase = apq / r;  // apq = r * phase
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        // rotation angle from tan(2 theta) = 2r/(app-aqq)
        double t;
        if (app == aqq) {
          t = 1.0;
        } else {
          const double tau = (app - aqq) / (2.0 * r);
          t = (tau >= 0.0 ? 1.0 : -1.0) /
              (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // U = I except U[p][p]=c, U[p][q]=-s*phase, U[q][p]=s*conj(phase),
        // U[q][q]=c; apply A <- U* A U
        for (std::size_t i = 0; i < n; ++i) {  // rows: A <- U* A
          const cplx rp = a.at(p, i), rq = a.at(q, i);
          a.at(p, i) = c * rp + s * phase * rq;
          a.at(q, i) = -s * std::conj(phase) * rp + c * rq;
        }
        for (std::size_t i = 0; i < n; ++i) {  // columns: A <- A U
          const cplx cp = a.at(i, p), cq = a.at(i, q);
          a.at(i, p) = c * cp + s * std::conj(phase) * cq;
          a.at(i, q) = -s * phase * cp + c * cq;
        }
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
        a.at(p, p) = a.at(p, p).real();
        a.at(q, q) = a.at(q, q).real();
      }
  }

  HermitianEigen out;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = a.at(i, i).real();
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(),
            std::greater<double>());
  return out;
}

StepFunction eigenvalue_function_of_matrix(const ComplexMatrix& t,
                                           double theta) {
  return StepFunction::uniform(
      hermitian_eigenvalues(hermitian_part(t, theta)).eigenvalues);
}

double operator_norm(const ComplexMatrix& t) {
  if (t.is_hermitian(1e-12)) {
    const auto eig = hermitian_eigenvalues(t).eigenvalues;
    return std::max(std::abs(eig.front()), std::abs(eig.back()));
  }
  ComplexMatrix b = multiply(t.adjoint(), t);
  const auto eig = hermitian_eigenvalues(b).eigenvalues;
  return std::sqrt(std::max(0.0, eig.front()));
}

double Rng::uniform01() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform01();  // (0,1]
  const double u2 = uniform01();
  const double m = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * M_PI * u2;
  spare_ = m * std::sin(ang);
  have_spare_ = true;
  return m * std::cos(ang);
}

std::uint64_t Rng::shard_seed(std::uint64_t root, std::uint64_t shard) {
  // splitmix64 step on root + golden-ratio stride
  std::uint64_t z = root + 0x9e3779b97f4a7c15ULL * (shard + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
  ComplexMatrix g(n);
  for (std::size_t j = 0; j < n; ++j)  // column-major fill
    for (std::size_t i = 0; i < n; ++i) g.at(i, j) = rng.complex_normal();

  ComplexMatrix q(n);
  std::vector<cplx> v(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) v[i] = g.at(i, j);
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t m = 0; m < j; ++m) {
        cplx proj = 0.0;
        for (std::size_t i = 0; i < n; ++i) proj += std::conj(q.at(i, m)) * v[i];
        for (std::size_t i = 0; i < n; ++i) v[i] -= proj * q.at(i, m);
      }
    double norm2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm2 += std::norm(v[i]);
    const double r = std::sqrt(norm2);
    if (r < 1e-12)
      throw std::runtime_error("random_unitary: degenerate Gaussian draw");
    for (std::size_t i = 0; i < n; ++i) q.at(i, j) = v[i] / r;
  }
  return q;
}

ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_unitary(n, rng);
}

ComplexMatrix random_projection(std::size_t n, std::size_t k,
                                std::uint64_t seed) {
  if (k < 1 || k > n)
    throw std::invalid_argument("random_projection: rank outside [1,n]");
  const ComplexMatrix u = random_unitary(n, seed);
  ComplexMatrix p(n);
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        p.at(i, j) += u.at(i, m) * std::conj(u.at(j, m));
  return p;
}

}  // namespace nrange
