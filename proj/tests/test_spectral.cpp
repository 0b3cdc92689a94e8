#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "helmfd/spectral.hpp"
#include "oracles.hpp"

using namespace helmfd;

TEST_CASE("sample: single mode and endpoints") {
  GridFunction g = sample(SineSeries({{1, 1.0}}), 4);
  REQUIRE(g.values.size() == 5);
  CHECK(g.values[0] == 0.0);
  CHECK(g.values[4] == 0.0);
  CHECK(g.values[1] == doctest::Approx(std::sin(M_PI / 4)).epsilon(1e-15));
  CHECK(g.values[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g.values[3] == doctest::Approx(std::sin(3 * M_PI / 4)).epsilon(1e-15));
}

TEST_CASE("sample: mode N+1 aliases to -(N-1) nodally") {
  GridFunction a = sample(SineSeries({{9, 1.0}}), 8);
  GridFunction b = sample(SineSeries({{7, -1.0}}), 8);
  for (int j = 0; j <= 8; ++j) CHECK(a.values[j] == b.values[j]);
}

TEST_CASE("sample matches dense evaluation restricted to nodes") {
  const SineSeries s({{10, 0.3}, {20, -0.7}});
  GridFunction g = sample(s, 16);
  // dense grid of 10^4 points containing every node
  const int dense = 16 * 625;
  double worst = 0.0;
  for (int i = 0; i <= dense; i += 625) {
    const double x = static_cast<double>(i) / dense;
    worst = std::max(worst, std::abs(s.evaluate(x) - g.values[i / 625]));
  }
  CHECK(worst < 1e-14);
}

TEST_CASE("dst_forward: orthogonality, zeros, aliasing") {
  SineSeries r = dst_forward(sample(SineSeries({{3, 2.5}}), 16));
  CHECK(r.at(3) == doctest::Approx(2.5).epsilon(1e-13));
  CHECK(oracle::max_abs_coeff_diff(r, SineSeries({{3, 2.5}})) < 1e-13);

  GridFunction zeros;
  zeros.n_intervals = 8;
  zeros.values.assign(9, 0.0);
  CHECK(dst_forward(zeros).empty());

  SineSeries aliased = dst_forward(sample(SineSeries({{9, 1.0}}), 8));
  CHECK(oracle::max_abs_coeff_diff(aliased, SineSeries({{7, -1.0}})) < 1e-13);
}

TEST_CASE("dst fast path equals direct path") {
  std::mt19937_64 rng(42);
  for (int n : {8, 12, 100, 257, 1024}) {
    GridFunction g;
    g.n_intervals = n;
    g.values.assign(n + 1, 0.0);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int j = 1; j < n; ++j) g.values[j] = u(rng);
    const SineSeries fast = dst_forward(g);
    const SineSeries direct = dst_forward_direct(g);
    CHECK(oracle::max_abs_coeff_diff(fast, direct) < 1e-12);
  }
}

TEST_CASE("round trip on modes 1..N-1") {
  std::mt19937_64 rng(7);
  for (int n : {8, 37, 64}) {
    const SineSeries s = oracle::random_series(rng, 6, n - 1);
    const SineSeries back = dst_forward(sample(s, n));
    for (const auto& [mode, c] : s.coeffs())
      CHECK(back.at(mode) == doctest::Approx(c).epsilon(1e-12));
  }
}

TEST_CASE("alias_coefficients: trivial folds") {
  CHECK(oracle::max_abs_coeff_diff(alias_coefficients(SineSeries({{1, 1.0}}), 8),
                                   SineSeries({{1, 1.0}})) == 0.0);
  // mode 2N-1 folds onto pi with flipped sign
  CHECK(oracle::max_abs_coeff_diff(alias_coefficients(SineSeries({{15, 1.0}}), 8),
                                   SineSeries({{1, -1.0}})) == 0.0);
  // modes N and 2N vanish on the grid
  CHECK(alias_coefficients(SineSeries({{8, 1.0}, {16, -2.0}}), 8).empty());
}

TEST_CASE("alias_coefficients agrees with dst(sample(.))") {
  const SineSeries s({{10, 0.3}, {20, -0.7}, {40, 0.5}});
  CHECK(oracle::max_abs_coeff_diff(alias_coefficients(s, 16),
                                   dst_forward(sample(s, 16))) < 1e-12);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const int n = 8 + static_cast<int>(i * 3.7);
    const SineSeries f = oracle::random_series(rng, 8, 5 * n);
    CHECK(oracle::max_abs_coeff_diff(alias_coefficients(f, n),
                                     dst_forward(sample(f, n))) < 1e-12);
  }
}

TEST_CASE("split_low_high boundaries") {
  auto [low, high] = split_low_high(SineSeries({{1, 1.0}, {20, 1.0}}), 8);
  CHECK(low.at(1) == 1.0);
  CHECK(high.at(20) == 1.0);
  auto [l2, h2] = split_low_high(SineSeries({{7, 1.0}}), 8);
  CHECK(l2.at(7) == 1.0);
  CHECK(h2.empty());
  auto [l3, h3] = split_low_high(SineSeries({{8, 1.0}}), 8);
  CHECK(l3.empty());
  CHECK(h3.at(8) == 1.0);
}

TEST_CASE("seminorm: closed values and quadrature oracle") {
  CHECK(seminorm(SineSeries({{1, 1.0}}), 0) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(seminorm(SineSeries({{1, 1.0}}), 1) ==
        doctest::Approx(M_PI / std::sqrt(2.0)).epsilon(1e-15));

  const SineSeries s({{10, 0.3}, {20, -0.7}});
  // second derivative of the series, squared, integrated by trapezoid
  auto d2sq = [&](double x) {
    double acc = 0.0;
    for (const auto& [mode, c] : s.coeffs()) {
      const double xi = mode * M_PI;
      acc += -c * xi * xi * std::sin(xi * x);
    }
    return acc * acc;
  };
  const double quad = std::sqrt(oracle::trapezoid(d2sq, 100000));
  CHECK(seminorm(s, 2) == doctest::Approx(quad).epsilon(1e-8));
}

TEST_CASE("Parseval splits exactly across low/high") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const SineSeries s = oracle::random_series(rng, 10, 200);
    const auto [low, high] = split_low_high(s, 32);
    for (int p = 0; p <= 2; ++p) {
      const double total = seminorm(s, p);
      const double parts =
          std::sqrt(seminorm(low, p) * seminorm(low, p) +
                    seminorm(high, p) * seminorm(high, p));
      CHECK(total == doctest::Approx(parts).epsilon(1e-12));
    }
  }
}

TEST_CASE("source spec parsing") {
  const SineSeries s = SineSeries::parse("10:0.3,20:-0.7");
  CHECK(s.at(10) == 0.3);
  CHECK(s.at(20) == -0.7);
  CHECK(SineSeries::parse("").empty());
  CHECK_THROWS_AS(SineSeries::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(SineSeries::parse("0:1"), std::invalid_argument);
  CHECK_THROWS_AS(SineSeries::parse("1:x"), std::invalid_argument);
}
