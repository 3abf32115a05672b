#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "nrange/spectral.hpp"

using namespace nrange;

namespace {

// adaptive Simpson quadrature, independent of the closed-form tails
double simpson(const std::function<double(double)>& f, double a, double b,
               int depth, double fa, double fm, double fb, double whole) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 1e-13)
    return left + right;
  return simpson(f, a, m, depth - 1, fa, flm, fm, left) +
         simpson(f, m, b, depth - 1, fm, frm, fb, right);
}

double integrate(const std::function<double(double)>& f, double a, double b) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(f, a, b, 40, fa, fm, fb, whole);
}

double semicircle_density(double variance, double x) {
  const double arg = 4.0 * variance - x * x;
  if (arg <= 0.0) return 0.0;
  return std::sqrt(arg) / (2.0 * M_PI * variance);
}

}  // namespace

TEST_CASE("atomic quantile is exact") {
  const auto d = RealDistribution::atomic({{1.0, 0.5}, {-1.0, 0.5}});
  const StepFunction f = quantile_step(d, 999);  // resolution ignored
  CHECK(f.values() == std::vector<double>{1.0, -1.0});
  CHECK(f.breakpoints() == std::vector<double>{0.0, 0.5, 1.0});
  CHECK(f.is_sorted());
}

TEST_CASE("cosine quantile inverts the arc-measure CDF") {
  // lambda(s) = cos(pi s); oracle: the tail mass of {cos(u) > t} under
  // uniform measure on [-pi,pi] is arccos(t)/pi, computed here by numeric
  // measure of a fine grid rather than the closed form
  const auto d = RealDistribution::cosine_pushforward();
  const StepFunction f = quantile_step(d, 512);
  CHECK(f.is_sorted());
  for (int k = 0; k < 512; k += 37) {
    const double s = (k + 0.5) / 512.0;
    CHECK(f.values()[k] == doctest::Approx(std::cos(M_PI * s)).epsilon(1e-12));
    // numeric tail measure at t = f.values()[k]
    const double t = f.values()[k];
    const int grid = 20000;
    int above = 0;
    for (int i = 0; i < grid; ++i) {
      const double u = -M_PI + 2.0 * M_PI * (i + 0.5) / grid;
      if (std::cos(u) > t) ++above;
    }
    CHECK(static_cast<double>(above) / grid == doctest::Approx(s).epsilon(2e-4));
  }
}

TEST_CASE("tucci quantile is the linear function") {
  const StepFunction f = quantile_step(RealDistribution::linear_tucci(), 256);
  for (int k = 0; k < 256; ++k) {
    const double s = (k + 0.5) / 256.0;
    CHECK(f.values()[k] == doctest::Approx(0.5 * (1.0 - 2.0 * s)).epsilon(1e-14));
  }
}

TEST_CASE("semicircle quantile inverts the density tail (quadrature oracle)") {
  for (double variance : {0.5, 0.25, 1.0}) {
    const auto d = RealDistribution::semicircle(variance);
    const StepFunction f = quantile_step(d, 256);
    const double edge = 2.0 * std::sqrt(variance);
    for (int k = 5; k < 256; k += 41) {
      const double s = (k + 0.5) / 256.0;
      const double q = f.values()[k];
      CHECK(q < edge);
      CHECK(q > -edge);
      const double tail = integrate(
          [&](double x) { return semicircle_density(variance, x); }, q, edge);
      CHECK(tail == doctest::Approx(s).epsilon(1e-9));
    }
  }
}

TEST_CASE("semicircle quantile handles shift") {
  const auto d = RealDistribution::semicircle(0.25, 2.0);
  const StepFunction f = quantile_step(d, 64);
  const auto base = quantile_step(RealDistribution::semicircle(0.25), 64);
  for (int k = 0; k < 64; ++k)
    CHECK(f.values()[k] == doctest::Approx(base.values()[k] + 2.0));
}

TEST_CASE("semicircle unit tail endpoints and monotonicity") {
  CHECK(semicircle_unit_tail(-1.0) == 1.0);
  CHECK(semicircle_unit_tail(1.0) == 0.0);
  CHECK(semicircle_unit_tail(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  double prev = 1.0;
  for (int i = 1; i <= 1000; ++i) {
    const double u = -1.0 + 2.0 * i / 1000.0;
    const double t = semicircle_unit_tail(u);
    CHECK(t <= prev);
    prev = t;
  }
}

TEST_CASE("real_part_distribution: matrix and atomic") {
  // single atom at i rotated by theta=0 lands at 0
  const auto m = SpectralModel::atomic({{cplx(0.0, 1.0), 1.0}});
  const auto d = real_part_distribution(m, 0.0);
  REQUIRE(d.kind() == RealDistribution::Kind::atomic);
  CHECK(d.atoms()[0].first == doctest::Approx(0.0));
  CHECK(d.atoms()[0].second == 1.0);

  // diag(1,-1) at theta=pi has spectrum {-1,1} with weights 1/2
  const auto mm =
      SpectralModel::matrix(ComplexMatrix::diagonal({1.0, -1.0}));
  const auto dm = real_part_distribution(mm, M_PI);
  REQUIRE(dm.kind() == RealDistribution::Kind::atomic);
  CHECK(dm.atoms().size() == 2);
  CHECK(dm.atoms()[0].first == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(dm.atoms()[1].first == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(dm.atoms()[0].second == doctest::Approx(0.5));
}

TEST_CASE("real_part_distribution: named laws") {
  // elliptic(pi/4) is the circular operator: std 1/sqrt2 at every angle
  const auto e = SpectralModel::elliptic(M_PI / 4.0);
  for (double theta : {0.0, 0.4, 1.1, 3.0, 5.5}) {
    const auto d = real_part_distribution(e, theta);
    REQUIRE(d.kind() == RealDistribution::Kind::semicircle);
    CHECK(d.variance() == doctest::Approx(0.5).epsilon(1e-14));
  }

  // elliptic(psi) at theta=0 has std cos(psi); at pi/2 std sin(psi)
  const auto e3 = SpectralModel::elliptic(M_PI / 3.0);
  CHECK(real_part_distribution(e3, 0.0).variance() ==
        doctest::Approx(std::cos(M_PI / 3) * std::cos(M_PI / 3)));
  CHECK(real_part_distribution(e3, M_PI / 2.0).variance() ==
        doctest::Approx(std::sin(M_PI / 3) * std::sin(M_PI / 3)));

  // dt: Re(S) = X/2, semicircle variance 1/4
  CHECK(real_part_distribution(SpectralModel::dt_quasinilpotent(), 0.3)
            .variance() == doctest::Approx(0.25));

  // semicircular(mean, v) rotates to shift mean*cos, variance v cos^2
  const auto sc = SpectralModel::semicircular(1.5, 2.0);
  const auto dsc = real_part_distribution(sc, 1.0);
  CHECK(dsc.shift() == doctest::Approx(1.5 * std::cos(1.0)));
  CHECK(dsc.variance() ==
        doctest::Approx(2.0 * std::cos(1.0) * std::cos(1.0)));
}

TEST_CASE("theta-independence of the rotation-invariant models") {
  const auto models = {SpectralModel::haar_unitary(), SpectralModel::circular(),
                       SpectralModel::tucci(),
                       SpectralModel::dt_quasinilpotent()};
  for (const auto& m : models) {
    const auto d0 = real_part_distribution(m, 0.0);
    for (double theta : {0.7, 2.0, 4.4, 6.1})
      CHECK(real_part_distribution(m, theta) == d0);
  }
}

TEST_CASE("atomic quantile integral equals the trace") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> uv(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 6);
    std::vector<std::pair<double, double>> atoms(n);
    double total = 0.0;
    for (auto& [v, w] : atoms) {
      v = uv(gen);
      const double draw = uv(gen);
      w = 0.1 + draw * draw;
      total += w;
    }
    double expected = 0.0;
    for (auto& [v, w] : atoms) {
      w /= total;
      expected += v * w;
    }
    const StepFunction f =
        quantile_step(RealDistribution::atomic(atoms), 1);
    CHECK(f.total_integral() == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("refinement convergence on the semicircle") {
  // |I(2N) - I(N)| shrinks monotonically for the pairing against a fixed
  // bounded step function
  const StepFunction weight = StepFunction::indicator_weight(0.3);
  const auto d = RealDistribution::semicircle(0.5);
  std::vector<double> vals;
  for (int n : {256, 512, 1024, 2048, 4096, 8192})
    vals.push_back(pairing_integral(quantile_step(d, n), weight, false));
  std::vector<double> diffs;
  for (std::size_t i = 1; i < vals.size(); ++i)
    diffs.push_back(std::abs(vals[i] - vals[i - 1]));
  for (std::size_t i = 1; i < diffs.size(); ++i) CHECK(diffs[i] < diffs[i - 1]);
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(SpectralModel::elliptic(0.0), std::invalid_argument);
  CHECK_THROWS_AS(SpectralModel::elliptic(M_PI / 2.0), std::invalid_argument);
  CHECK_THROWS_AS(SpectralModel::atomic({{cplx(1.0), 0.7}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(quantile_step(RealDistribution::cosine_pushforward(), 0),
                  std::invalid_argument);
}

TEST_CASE("model traits") {
  CHECK(SpectralModel::haar_unitary().norm_bound() == 1.0);
  CHECK(SpectralModel::circular().norm_bound() == 2.0);
  CHECK(SpectralModel::dt_quasinilpotent().norm_bound() ==
        doctest::Approx(std::sqrt(std::exp(1.0))));
  CHECK(SpectralModel::haar_unitary().trace() == cplx(0.0));
  CHECK(SpectralModel::semicircular(1.25, 1.0).trace() == cplx(1.25));
  CHECK(SpectralModel::semicircular(0.0, 1.0).is_selfadjoint());
  CHECK_FALSE(SpectralModel::circular().is_selfadjoint());
  CHECK(SpectralModel::atomic({{cplx(1.0, 0.0), 1.0}}).is_selfadjoint());
  CHECK_FALSE(SpectralModel::atomic({{cplx(1.0, 0.5), 1.0}}).is_selfadjoint());
}
