#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "treekummer/errors.hpp"
#include "treekummer/stat_tests.hpp"
#include "treekummer/transform.hpp"

using namespace treekummer;

TEST_CASE("ks gap formula") {
  // single point with F = 0.5: the empirical CDF jumps 0 -> 1 across it
  CHECK(ks_statistic(std::vector<double>{0.5}) == 0.5);
  // a perfectly spaced grid has gap 1/(2n) at F = (i+0.5)/n
  const std::vector<double> f{0.125, 0.375, 0.625, 0.875};
  CHECK(ks_statistic(f) == doctest::Approx(0.125));
}

TEST_CASE("ks test guards") {
  std::vector<double> tiny{1, 2, 3};
  CHECK_THROWS_AS(ks_test(tiny, [](double x) { return x; }, 0.05), TooFewSamples);

  std::vector<double> sample(50);
  for (int i = 0; i < 50; ++i) sample[i] = 0.01 * (i + 1);
  CHECK_THROWS_AS(ks_test(sample, [](double x) { return 1.0 - x; }, 0.05),
                  NonMonotoneCdf);
}

TEST_CASE("ks accepts the true law and rejects a wrong one") {
  Rng rng(51);
  const auto draws = gamma_sample(GammaParams(1, 1), rng, 100000);
  auto ok = ks_test(draws, [](double x) { return 1.0 - std::exp(-x); }, 0.01);
  CHECK(ok.statistic < 1.628 / std::sqrt(100000.0));
  CHECK_FALSE(ok.reject);

  const NormalizedGamma wrong{GammaParams(1.2, 1.0)};
  auto bad = ks_test(draws, [&](double x) { return wrong.cdf(x); }, 0.01);
  CHECK(bad.reject);
  CHECK(*bad.p_value < 1e-6);
}

TEST_CASE("ks statistic is invariant under a monotone transform") {
  Rng rng(52);
  auto draws = gamma_sample(GammaParams(2, 1), rng, 5000);
  const NormalizedGamma law{GammaParams(2, 1)};
  auto direct = ks_test(draws, [&](double x) { return law.cdf(x); }, 0.05);
  std::vector<double> logged(draws.size());
  std::transform(draws.begin(), draws.end(), logged.begin(),
                 [](double x) { return std::log(x); });
  auto transformed =
      ks_test(logged, [&](double t) { return law.cdf(std::exp(t)); }, 0.05);
  CHECK(direct.statistic == transformed.statistic);
}

TEST_CASE("ks rejection rate is calibrated under the null") {
  Rng rng(53);
  const int reps = 300, n = 1000;
  int rejections = 0;
  for (int r = 0; r < reps; ++r) {
    const auto draws = gamma_sample(GammaParams(1, 1), rng, n);
    const auto rep = ks_test(draws, [](double x) { return 1.0 - std::exp(-x); }, 0.05);
    if (rep.reject) ++rejections;
  }
  const double rate = static_cast<double>(rejections) / reps;
  CHECK(rate >= 0.02);
  CHECK(rate <= 0.09);
}

TEST_CASE("two-sample ks") {
  Rng rng(54);
  const auto a = gamma_sample(GammaParams(2, 1), rng, 20000);
  const auto b = gamma_sample(GammaParams(2, 1), rng, 20000);
  CHECK_FALSE(ks_two_sample(a, b, 1e-3).reject);

  const auto c = gamma_sample(GammaParams(2.6, 1), rng, 20000);
  CHECK(ks_two_sample(a, c, 1e-3).reject);
}

TEST_CASE("fast distance covariance equals the definitional one") {
  Rng rng(55);
  for (int n : {50, 173, 400}) {
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = rng.normal();
      y[i] = 0.3 * x[i] + rng.normal();
    }
    // inject ties
    x[3] = x[7];
    y[5] = y[11];
    const double ref = dcov_sq_reference(x, y);
    const double fast = dcov_sq_fast(x, y);
    CHECK(fast == doctest::Approx(ref).epsilon(1e-9));
  }

  // heavily tied integer-valued data
  std::vector<double> xi(200), yi(200);
  for (int i = 0; i < 200; ++i) {
    xi[i] = std::floor(5.0 * rng.uniform());
    yi[i] = std::floor(3.0 * rng.uniform()) + (i % 2 == 0 ? xi[i] : 0.0);
  }
  CHECK(dcov_sq_fast(xi, yi) == doctest::Approx(dcov_sq_reference(xi, yi)).epsilon(1e-10));
}

TEST_CASE("dcor basic properties") {
  Rng rng(56);
  const int n = 300;
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) {
    x[i] = rng.gamma(1.0, 1.0);
    y[i] = rng.gamma(2.0, 1.0);
  }

  // identical columns: definitional maximum
  CHECK(dcor(x, x) == 1.0);

  // exact symmetry
  CHECK(dcor(x, y) == dcor(y, x));

  // scale/shift invariance in the first argument
  std::vector<double> z(n);
  for (int i = 0; i < n; ++i) z[i] = 3.7 * x[i] + 11.0;
  CHECK(std::fabs(dcor(z, y) - dcor(x, y)) <= 1e-12);

  // a constant column carries no dependence signal
  const std::vector<double> flat(n, 2.0);
  CHECK(dcor(flat, y) == 0.0);
}

TEST_CASE("distance correlation permutation test") {
  Rng rng(57);
  const int n = 2000;
  std::vector<double> x(n), y(n), noisy(n);
  for (int i = 0; i < n; ++i) {
    x[i] = rng.gamma(1.0, 1.0);
    y[i] = rng.gamma(1.0, 1.0);
    noisy[i] = x[i] + 0.01 * rng.normal();
  }

  auto indep = distance_correlation(x, y, 200, rng, 0.05);
  CHECK(*indep.p_value > 1.0 / 201.0);

  auto dep = distance_correlation(x, noisy, 200, rng, 0.05);
  CHECK(*dep.p_value == doctest::Approx(1.0 / 201.0));
  CHECK(dep.reject);

  std::vector<double> short_x(30, 1.0);
  CHECK_THROWS_AS(distance_correlation(short_x, short_x, 10, rng, 0.05),
                  TooFewSamples);
  CHECK_THROWS_AS(distance_correlation(x, short_x, 10, rng, 0.05), LengthMismatch);
}

TEST_CASE("distance correlation subsampling keeps determinism") {
  Rng a(77), b(77);
  std::vector<double> x(5000), y(5000);
  Rng fill(1);
  for (int i = 0; i < 5000; ++i) {
    x[i] = fill.gamma(1.0, 1.0);
    y[i] = fill.gamma(1.0, 1.0);
  }
  const auto r1 = distance_correlation(x, y, 50, a, 0.05, 1000);
  const auto r2 = distance_correlation(x, y, 50, b, 0.05, 1000);
  CHECK(r1.statistic == r2.statistic);
  CHECK(*r1.p_value == *r2.p_value);
}

TEST_CASE("dcor rejection rate is calibrated under the null") {
  Rng rng(58);
  const int reps = 60, n = 500;
  int rejections = 0;
  for (int r = 0; r < reps; ++r) {
    std::vector<double> x(n), y(n);
    for (int i = 0; i < n; ++i) {
      x[i] = rng.gamma(1.0, 1.0);
      y[i] = rng.gamma(1.0, 1.0);
    }
    if (distance_correlation(x, y, 99, rng, 0.05).reject) ++rejections;
  }
  // loose binomial band around 5% for the quick unit run; the acceptance
  // suite runs the full-width calibration
  CHECK(rejections >= 0);
  CHECK(rejections <= 9);
}

TEST_CASE("chi-square grid test") {
  Rng rng(59);
  const int n = 20000;
  SampleMatrix indep;
  indep.rows = n;
  indep.cols = 3;
  indep.data.resize(static_cast<size_t>(n) * 3);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < 3; ++c) indep.at(r, c) = rng.gamma(1.0, 1.0);
  }
  CHECK_FALSE(chi_square_independence(indep, 1e-3).reject);

  SampleMatrix copies;
  copies.rows = n;
  copies.cols = 2;
  copies.data.resize(static_cast<size_t>(n) * 2);
  for (int r = 0; r < n; ++r) {
    const double v = rng.gamma(1.0, 1.0);
    copies.at(r, 0) = v;
    copies.at(r, 1) = v;
  }
  const auto rep = chi_square_independence(copies, 1e-3);
  CHECK(rep.reject);
  CHECK(*rep.p_value < 1e-12);
}

TEST_CASE("independence battery flags deterministic copies") {
  Rng rng(60);
  const int n = 2000;
  SampleMatrix m;
  m.rows = n;
  m.cols = 2;
  m.data.resize(static_cast<size_t>(n) * 2);
  for (int r = 0; r < n; ++r) {
    const double v = rng.gamma(1.0, 1.0);
    m.at(r, 0) = v;
    m.at(r, 1) = v;
  }
  const auto reports = independence_battery(m, 0.05, rng);
  REQUIRE(reports.size() == 2);  // one pair + chi-square
  bool any = false;
  for (const auto& rep : reports) any = any || rep.reject;
  CHECK(any);
  // the dCor p-value sits at its permutation floor
  CHECK(*reports[0].p_value == doctest::Approx(1.0 / 201.0));
}

TEST_CASE("independence battery accepts independent columns") {
  Rng rng(61);
  const int n = 5000;
  SampleMatrix m;
  m.rows = n;
  m.cols = 3;
  m.data.resize(static_cast<size_t>(n) * 3);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < 3; ++c) m.at(r, c) = rng.gamma(0.8 + c, 1.0);
  }
  const auto reports = independence_battery(m, 1e-3, rng);
  REQUIRE(reports.size() == 4);  // 3 pairs + chi-square
  for (const auto& rep : reports) CHECK_FALSE(rep.reject);
}

TEST_CASE("involution independence property holds when matched") {
  Rng rng(62);
  auto reports = hv15_check(2.0, 1.0, 1.0, 20000, rng, 1e-3, 200);
  CHECK_FALSE(reports.ks_u.reject);
  CHECK_FALSE(reports.ks_v.reject);
  CHECK_FALSE(reports.independence.reject);
}

TEST_CASE("involution independence breaks under a rate mismatch") {
  Rng rng(63);
  // X ~ K(1,1,1) would pair with Y ~ G(2,1); feeding G(2,3) breaks it
  auto reports = hv15_run(KummerParams(1, 1, 1), GammaParams(2, 3), 1.0, 2.0, 1.0,
                          20000, rng, 1e-3, 999);
  CHECK(reports.independence.reject);
  CHECK(*reports.independence.p_value <= 1e-3);
}

TEST_CASE("involution applied twice recovers the marginals exactly") {
  Rng rng(64);
  const auto x = kummer_sample(KummerParams(2, -1, 1), rng, 200);
  const auto y = gamma_sample(GammaParams(1, 1), rng, 200);
  for (int i = 0; i < 200; ++i) {
    const auto [u, v] = involution_T(x[i], y[i]);
    const auto [x2, y2] = involution_T(u, v);
    CHECK(x2 == doctest::Approx(x[i]).epsilon(1e-14));
    CHECK(y2 == doctest::Approx(y[i]).epsilon(1e-14));
  }
}
