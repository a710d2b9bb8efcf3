#include <doctest.h>

#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "qecc/bounds.hpp"
#include "qecc/threshold.hpp"

using namespace qecc;

namespace {

// The nine threshold columns as printed, q = 3..11.
const std::vector<std::pair<int, int>> kPinnedMilli = {
    {3, 605}, {4, 340}, {5, 218}, {6, 152}, {7, 111}, {8, 85}, {9, 68}, {10, 55}, {11, 45}};

}  // namespace

TEST_CASE("delta threshold values") {
  CHECK(delta_threshold(5) == 2 * exp(Real(1)) / 25);
  // 0.21746... rounds up to 0.218
  CHECK(static_cast<double>(delta_threshold(5)) == doctest::Approx(0.217463).epsilon(1e-5));
  CHECK(static_cast<double>(delta_threshold(4)) == doctest::Approx(0.339785).epsilon(1e-5));
  CHECK(static_cast<double>(delta_threshold(10)) == doctest::Approx(0.054366).epsilon(1e-5));
  CHECK_THROWS_AS(delta_threshold(1), std::domain_error);
}

TEST_CASE("threshold table reproduces all 18 printed values") {
  const auto rows = table1();
  REQUIRE(rows.size() == kPinnedMilli.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].q == kPinnedMilli[i].first);
    CHECK(rows[i].delta_milli == kPinnedMilli[i].second);
  }
  CHECK(rows[0].delta_str() == "0.605");
  CHECK(rows[0].one_minus_delta_str() == "0.395");
  CHECK(rows[4].delta_str() == "0.111");
  CHECK(rows[4].one_minus_delta_str() == "0.889");
  CHECK(rows[8].delta_str() == "0.045");
  CHECK(rows[8].one_minus_delta_str() == "0.955");
  CHECK(rows[6].delta_str() == "0.068");  // ceiling, not nearest (0.0671...)
}

TEST_CASE("delta threshold is strictly decreasing in q") {
  Real prev = delta_threshold(3);
  for (int q = 4; q <= 256; ++q) {
    const Real cur = delta_threshold(q);
    REQUIRE(cur < prev);
    prev = cur;
  }
}

TEST_CASE("thm1 applicability examples") {
  // q = 5, n = 20: (1 - delta) * 20 = 15.65...
  auto a = thm1_applies(20, ipow(5, 10), 5, 5);  // 10 + 5 = 15 <= 15.65
  CHECK(a.status == Thm1Status::kApplies);
  CHECK(a.precision_bits == kRealPrecisionBits);

  auto b = thm1_applies(20, ipow(5, 12), 4, 5);  // 16 > 15.65
  CHECK(b.status == Thm1Status::kDoesNotApply);

  // d = n never applies for K >= 2 (no such code: Singleton is violated)
  auto c = thm1_applies(10, BigInt(3), 10, 3);
  CHECK(c.status != Thm1Status::kApplies);
  CHECK(c.status == Thm1Status::kSingletonInconsistent);

  // singleton-violating tuples are fenced off even when the margin is wide
  auto d2 = thm1_applies(40, ipow(11, 1), 30, 11);  // k+d = 31 <= 0.955*40
  CHECK(d2.status == Thm1Status::kSingletonInconsistent);

  auto e = thm1_applies(10, BigInt(4), 2, 2);
  CHECK(e.status == Thm1Status::kNotApplicable);  // q < 3

  CHECK_THROWS_AS(thm1_applies(10, BigInt(1), 2, 3), std::invalid_argument);
}

TEST_CASE("margin classification guard band") {
  CHECK(classify_margin(Real("1e-29")) == Thm1Status::kApplies);
  CHECK(classify_margin(Real("-1e-29")) == Thm1Status::kDoesNotApply);
  CHECK(classify_margin(Real("1e-31")) == Thm1Status::kIndeterminate);
  CHECK(classify_margin(Real("-1e-31")) == Thm1Status::kIndeterminate);
  CHECK(classify_margin(Real(0)) == Thm1Status::kIndeterminate);
}

TEST_CASE("capacity T") {
  // t = 0: T = q^{delta n + d} >= 1
  CHECK(capacity_T(8, 1, 3, Real("0.5")) > 1);

  // same quantity through a different decomposition
  auto split = [](int n, int d, int q, const Real& delta) {
    const int t = (d - 1) / 2;
    const BigInt s = sphere_sum(n, t, BigInt(q) * q - 1);
    return exp(delta * n * log(Real(q))) * exp(d * log(Real(q))) / Real(s);
  };
  for (auto [n, d, q] : std::vector<std::array<int, 3>>{{20, 5, 5}, {10, 3, 3}, {30, 7, 9}}) {
    const Real delta = delta_threshold(q);
    const Real t1 = capacity_T(n, d, q, delta);
    const Real t2 = split(n, d, q, delta);
    CHECK(abs(t1 - t2) <= abs(t1) * Real("1e-40"));
  }

  // pinned case at delta = 2e/q^2: q = 5, n = 20, d = 5 (T is about 31)
  {
    const Real t = capacity_T(20, 5, 5, delta_threshold(5));
    CHECK(t >= 1);
    const BigInt s = sphere_sum(20, 2, BigInt(24));
    CHECK(s == 109921);  // 1 + 20*24 + 190*576
    CHECK(qhb_check(QuantumParams::from_k(20, 10, 5, 5, false)).satisfied);
  }

  // T >= 1 whenever the condition applies, evaluated at the slack-free
  // delta = 1 - (k+d)/n of the certifying argument
  std::mt19937_64 rng(13);
  int found = 0;
  while (found < 50) {
    const int q = 3 + static_cast<int>(rng() % 9);
    const int n = 2 + static_cast<int>(rng() % 40);
    const int k = 1 + static_cast<int>(rng() % n);
    const int d = 1 + static_cast<int>(rng() % n);
    const auto r = thm1_applies(n, ipow(q, k), d, q);
    if (r.status != Thm1Status::kApplies) continue;
    ++found;
    const Real tight_delta = 1 - Real(k + d) / n;
    REQUIRE(capacity_T(n, d, q, tight_delta) >= 1);
  }

  CHECK_THROWS_AS(capacity_T(10, 3, 3, Real(0)), std::domain_error);
  CHECK_THROWS_AS(capacity_T(10, 3, 3, Real("1.5")), std::domain_error);
}

TEST_CASE("entropy condition left-hand side") {
  // t = 0: h(0) = 0, so the whole expression is -1/n
  CHECK(qhbcond_lhs(10, 0, 5) == Real(-1) / 10);

  // n = 2t: h(1/2) = 1
  const Real expect = log(Real(2)) / log(Real(5)) + Real(1) / 2 * log(1 - Real(1) / 25) / log(Real(5)) - Real(1) / 10;
  CHECK(abs(qhbcond_lhs(10, 5, 5) - expect) < Real("1e-45"));

  // independent long-double evaluation
  const double got = static_cast<double>(qhbcond_lhs(10, 2, 5));
  const double tn = 0.2;
  const double h = -tn * std::log2(tn) - (1 - tn) * std::log2(1 - tn);
  const double want = h * std::log(2.0) / std::log(5.0) + tn * std::log(1 - 1.0 / 25) / std::log(5.0) - 0.1;
  CHECK(got == doctest::Approx(want).epsilon(1e-12));

  CHECK_THROWS_AS(qhbcond_lhs(10, 11, 5), std::domain_error);
}

TEST_CASE("entropy condition is met at the certifying delta") {
  // for applying tuples, the condition left-hand side stays below the
  // slack-free delta = 1 - (k+d)/n that drives the certificate
  std::mt19937_64 rng(31);
  int found = 0;
  while (found < 100) {
    const int q = 3 + static_cast<int>(rng() % 9);
    const int n = 2 + static_cast<int>(rng() % 59);
    const int k = 1 + static_cast<int>(rng() % n);
    const int d = 1 + static_cast<int>(rng() % n);
    if (thm1_applies(n, ipow(q, k), d, q).status != Thm1Status::kApplies) continue;
    ++found;
    const Real tight_delta = 1 - Real(k + d) / n;
    REQUIRE(qhbcond_lhs(n, (d - 1) / 2, q) <= tight_delta);
  }
}

TEST_CASE("f function") {
  // f(1, q) = 1 - log_q 2, positive for q >= 3
  for (int q = 3; q <= 11; ++q) {
    const Real expect = 1 - log(Real(2)) / log(Real(q));
    CHECK(abs(f_function(Real(1), q) - expect) < Real("1e-45"));
    CHECK(f_function(Real(1), q) > 0);
  }

  // boundary: f(2e/q^2) >= 0, small and positive at q = 3
  const Real boundary = f_function(delta_threshold(3), 3);
  CHECK(boundary > 0);
  CHECK(boundary < Real("0.05"));

  // nonnegative and increasing on [2e/q^2, 1]
  for (int q = 3; q <= 11; ++q) {
    Real prev = f_function(delta_threshold(q), q);
    CHECK(prev >= 0);
    for (int i = 1; i <= 40; ++i) {
      const Real x = delta_threshold(q) + (1 - delta_threshold(q)) * i / 40;
      const Real cur = f_function(x, q);
      REQUIRE(cur >= prev);
      REQUIRE(cur >= 0);
      prev = cur;
    }
  }

  CHECK_THROWS_AS(f_function(Real(0), 3), std::domain_error);
  CHECK_THROWS_AS(f_function(Real(2), 3), std::domain_error);
}

TEST_CASE("f derivative: finite differences match the closed form") {
  const Real h("1e-6");
  for (int q : {3, 5, 9}) {
    for (double xd : {0.3, 0.7, 1.0, 1.4}) {
      const Real x(xd);
      const Real fd = (f_function(x + h, q) - f_function(x - h, q)) / (2 * h);
      CHECK(abs(fd - f_derivative(x, q)) < Real("1e-9"));
    }
    // sign flips at 2/(q^2+1)
    const Real flip = Real(2) / (q * q + 1);
    CHECK(f_derivative(flip * Real("1.01"), q) > 0);
    CHECK(f_derivative(flip * Real("0.99"), q) < 0);
  }
}

TEST_CASE("entropy bound on binomial sums, n <= 40") {
  for (int n = 1; n <= 40; ++n) {
    for (int t = 0; 2 * t <= n; ++t) {
      BigInt lhs = 0;
      for (int j = 0; j <= t; ++j) lhs += binomial(n, j);
      const Real rhs = exp(Real(n) * binary_entropy(Real(t) / n) * log(Real(2)));
      REQUIRE(Real(lhs) <= rhs * (1 + Real("1e-30")));
    }
  }
}

TEST_CASE("thm1 conclusion cross-checked against the exact bound") {
  std::mt19937_64 rng(29);
  int found = 0;
  while (found < 500) {
    const int q = 3 + static_cast<int>(rng() % 9);
    const int n = 2 + static_cast<int>(rng() % 59);
    const int k = 1 + static_cast<int>(rng() % n);
    const int d = 1 + static_cast<int>(rng() % n);
    if (thm1_applies(n, ipow(q, k), d, q).status != Thm1Status::kApplies) continue;
    ++found;
    REQUIRE(qhb_check(QuantumParams::from_k(n, k, d, q, false)).satisfied);
  }
}
