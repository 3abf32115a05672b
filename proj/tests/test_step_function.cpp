#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "nrange/step_function.hpp"

using namespace nrange;

namespace {

// independent oracle: Lebesgue measure of {f >= x}
double measure_at_least(const StepFunction& f, double x) {
  double m = 0.0;
  for (std::size_t k = 0; k < f.piece_count(); ++k)
    if (f.values()[k] >= x) m += f.piece_width(k);
  return m;
}

StepFunction random_step(std::mt19937_64& gen, int max_pieces = 6) {
  std::uniform_int_distribution<int> np(1, max_pieces);
  std::uniform_real_distribution<double> uv(-2.0, 2.0);
  std::uniform_real_distribution<double> uw(0.05, 1.0);
  const int n = np(gen);
  std::vector<std::pair<double, double>> pieces(n);
  double total = 0.0;
  for (auto& [v, w] : pieces) {
    v = uv(gen);
    w = uw(gen);
    total += w;
  }
  for (auto& [v, w] : pieces) w /= total;
  return StepFunction::from_pieces(pieces);
}

// blockwise averaging of an equal-width step function: the function-level
// conditional expectation, so the result is majorized by the input
StepFunction random_pinching(std::mt19937_64& gen, const StepFunction& f) {
  const std::size_t n = f.piece_count();
  std::vector<double> vals(f.values());
  std::uniform_int_distribution<std::size_t> cut(0, 1);
  std::vector<double> out;
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    while (j < n && cut(gen) == 0) ++j;
    double mean = 0.0;
    for (std::size_t k = i; k < j; ++k) mean += vals[k];
    mean /= static_cast<double>(j - i);
    for (std::size_t k = i; k < j; ++k) out.push_back(mean);
    i = j;
  }
  return StepFunction::uniform(out);
}

}  // namespace

TEST_CASE("construction validates invariants") {
  CHECK_THROWS_AS(StepFunction({0.0, 0.5}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(StepFunction({0.0, 0.5, 0.5, 1.0}, {1.0, 2.0, 3.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(StepFunction({0.0, 1.0}, {}), std::invalid_argument);
  const StepFunction c = StepFunction::constant(3.0);
  CHECK(c.piece_count() == 1);
  CHECK(c.is_sorted());
  CHECK(c.value_at(0.999) == 3.0);
  CHECK_THROWS_AS(c.value_at(1.0), std::domain_error);
}

TEST_CASE("rearrange sorts pieces") {
  // pieces (1/3:1, 1/3:3, 1/3:2) -> (1/3:3, 1/3:2, 1/3:1)
  const StepFunction f = StepFunction::uniform({1.0, 3.0, 2.0});
  const StepFunction r = rearrange(f);
  CHECK(r.values() == std::vector<double>{3.0, 2.0, 1.0});
  CHECK(r.is_sorted());

  // constant stays constant
  const StepFunction c = StepFunction::constant(5.5);
  CHECK(rearrange(c).values() == std::vector<double>{5.5});
}

TEST_CASE("rearrange merges equal values and preserves the distribution") {
  // pieces (1/2:0, 1/4:5, 1/4:5) -> (1/2:5, 1/2:0)
  const StepFunction f =
      StepFunction::from_pieces({{0.0, 0.5}, {5.0, 0.25}, {5.0, 0.25}});
  const StepFunction r = rearrange(f);
  CHECK(r.piece_count() == 2);
  CHECK(r.values() == std::vector<double>{5.0, 0.0});
  CHECK(r.breakpoints() == std::vector<double>{0.0, 0.5, 1.0});
  // oracle: distribution functions m({ . >= x}) agree for all x
  for (double x : {-1.0, 0.0, 1.0, 4.9, 5.0, 5.1})
    CHECK(measure_at_least(f, x) == doctest::Approx(measure_at_least(r, x)));
}

TEST_CASE("rearrange is idempotent and integral-preserving") {
  std::mt19937_64 gen(42);
  for (int trial = 0; trial < 200; ++trial) {
    const StepFunction f = random_step(gen);
    const StepFunction r = rearrange(f);
    const StepFunction rr = rearrange(r);
    CHECK(r.breakpoints() == rr.breakpoints());
    CHECK(r.values() == rr.values());
    CHECK(r.total_integral() == doctest::Approx(f.total_integral()).epsilon(1e-13));
    for (double x : {-2.0, -0.5, 0.0, 0.5, 1.5})
      CHECK(measure_at_least(f, x) ==
            doctest::Approx(measure_at_least(r, x)).epsilon(1e-13));
  }
}

TEST_CASE("partial_integral") {
  CHECK(partial_integral(StepFunction::constant(1.0), 0.7) == doctest::Approx(0.7));
  const StepFunction f = StepFunction::uniform({1.0, 0.0});
  CHECK(partial_integral(f, 0.75) == doctest::Approx(0.5));
  const StepFunction g = StepFunction::uniform({3.0, 1.0});
  CHECK(partial_integral(g, 1.0) == doctest::Approx(2.0));
  CHECK(partial_integral(g, 0.0) == 0.0);
  CHECK_THROWS_AS(partial_integral(g, -0.1), std::domain_error);
  CHECK_THROWS_AS(partial_integral(g, 1.1), std::domain_error);
}

TEST_CASE("majorizes verdicts") {
  const StepFunction f = StepFunction::uniform({1.0, 0.0});
  // f majorizes the constant 1/2: partial integrals min(t,1/2) vs t/2
  const auto v1 = majorizes(f, StepFunction::constant(0.5));
  CHECK(v1.majorizes);
  CHECK(v1.total_integral_gap == doctest::Approx(0.0));

  // reflexivity with zero gap
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    const StepFunction h = random_step(gen);
    const auto v = majorizes(h, rearrange(h));
    CHECK(v.majorizes);
    CHECK(std::abs(v.total_integral_gap) < 1e-12);
  }

  // total integral mismatch
  const auto v2 = majorizes(f, StepFunction::constant(0.4));
  CHECK_FALSE(v2.majorizes);
  CHECK(v2.total_integral_gap == doctest::Approx(0.1));

  // strict partial-integral violation: g front-loads more mass
  const auto v3 = majorizes(StepFunction::constant(0.5), f);
  CHECK_FALSE(v3.majorizes);
  CHECK(v3.worst_t == doctest::Approx(0.5));
}

TEST_CASE("pairing_integral examples") {
  const StepFunction ind = StepFunction::uniform({1.0, 0.0});
  CHECK(pairing_integral(ind, ind, false) == doctest::Approx(0.5));
  CHECK(pairing_integral(ind, ind, true) == doctest::Approx(0.0));

  // constant factor
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 50; ++trial) {
    const StepFunction g = random_step(gen);
    const StepFunction c = StepFunction::constant(1.7);
    const double expected = 1.7 * g.total_integral();
    CHECK(pairing_integral(c, g, false) == doctest::Approx(expected));
    CHECK(pairing_integral(c, g, true) == doctest::Approx(expected));
  }

  const StepFunction f = StepFunction::uniform({1.0, 0.0});
  const StepFunction g = StepFunction::uniform({2.0, 1.0});
  CHECK(pairing_integral(f, g, false) == doctest::Approx(1.0));
}

TEST_CASE("pairing fast path agrees with the merge walk") {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> uv(-2.0, 2.0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> vals(64);
    for (double& v : vals) v = uv(gen);
    const StepFunction f = StepFunction::uniform(vals);  // fast path eligible
    const StepFunction g = random_step(gen, 3);
    // same function without the uniform flag: forces the general walk
    const StepFunction f2(f.breakpoints(), f.values());
    for (bool rev : {false, true})
      CHECK(pairing_integral(f, g, rev) ==
            doctest::Approx(pairing_integral(f2, g, rev)).epsilon(1e-13));
  }
}

TEST_CASE("rearrangement inequality against brute-force permutations") {
  std::mt19937_64 gen(13);
  std::uniform_real_distribution<double> uv(-1.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 6);
    std::vector<double> fv(n), gv(n);
    for (double& v : fv) v = uv(gen);
    for (double& v : gv) v = uv(gen);
    std::sort(fv.rbegin(), fv.rend());
    std::sort(gv.rbegin(), gv.rend());
    const StepFunction f = StepFunction::uniform(fv);
    const StepFunction g = StepFunction::uniform(gv);
    const double hi = pairing_integral(f, g, false);
    const double lo = pairing_integral(f, g, true);

    std::vector<double> perm(gv);
    std::sort(perm.begin(), perm.end());
    do {
      const double mid = pairing_integral(f, StepFunction::uniform(perm), false);
      CHECK(mid <= hi + 1e-12);
      CHECK(mid >= lo - 1e-12);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
}

TEST_CASE("majorization is transitive along pinching chains") {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> uv(-2.0, 2.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> vals(8);
    for (double& v : vals) v = uv(gen);
    const StepFunction f = StepFunction::uniform(vals);
    const StepFunction g = random_pinching(gen, f);
    const StepFunction h = random_pinching(gen, g);
    CHECK(majorizes(f, g).majorizes);
    CHECK(majorizes(g, h).majorizes);
    CHECK(majorizes(f, h).majorizes);
  }
}

TEST_CASE("mutual majorization means equal eigenvalue functions") {
  std::mt19937_64 gen(19);
  for (int trial = 0; trial < 100; ++trial) {
    const StepFunction f = random_step(gen);
    std::vector<std::pair<double, double>> shuffled;
    for (std::size_t k = 0; k < f.piece_count(); ++k)
      shuffled.emplace_back(f.values()[k], f.piece_width(k));
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    const StepFunction g = StepFunction::from_pieces(shuffled);
    CHECK(majorizes(f, g).majorizes);
    CHECK(majorizes(g, f).majorizes);
    const StepFunction rf = rearrange(f), rg = rearrange(g);
    CHECK(rf.values() == rg.values());
  }
}

TEST_CASE("convex combinations stay majorized") {
  std::mt19937_64 gen(29);
  std::uniform_real_distribution<double> uv(-2.0, 2.0);
  std::uniform_real_distribution<double> ut(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> vals(8);
    for (double& v : vals) v = uv(gen);
    const StepFunction f = StepFunction::uniform(vals);
    const StepFunction g1 = random_pinching(gen, f);
    const StepFunction g2 = random_pinching(gen, f);
    const double t = ut(gen);
    const StepFunction mix = rearrange(pointwise_combine(g1, g2, t));
    CHECK(majorizes(f, mix).majorizes);
  }
}

TEST_CASE("reversed is an involution preserving the integral") {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 50; ++trial) {
    const StepFunction f = random_step(gen);
    const StepFunction r = reversed(reversed(f));
    CHECK(r.values() == f.values());
    CHECK(reversed(f).total_integral() ==
          doctest::Approx(f.total_integral()).epsilon(1e-13));
  }
}
