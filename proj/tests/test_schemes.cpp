#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "helmfd/schemes.hpp"
#include "oracles.hpp"

using namespace helmfd;

TEST_CASE("scheme names round-trip") {
  for (SchemeKind s : kAllSchemes)
    CHECK(scheme_from_name(scheme_name(s)) == s);
  CHECK(!scheme_from_name("spectral"));
}

TEST_CASE("discrete_symbol hand values") {
  CHECK(discrete_symbol(SchemeKind::Classical, M_PI, 2.0, 0.5) ==
        doctest::Approx(-4.0).epsilon(1e-14));
  // corrected schemes vanish exactly at xi = k
  for (auto [k, h] : {std::pair<double, double>{10.0, 1.0 / 64}, {33.7, 1.0 / 128}}) {
    CHECK(std::abs(discrete_symbol(SchemeKind::KMod, k, k, h)) < 1e-12 * k * k);
    CHECK(std::abs(discrete_symbol(SchemeKind::LMod, k, k, h)) < 1e-12 * k * k);
    CHECK(std::abs(discrete_symbol(SchemeKind::LFMod, k, k, h)) < 1e-12 * k * k);
  }
  CHECK_THROWS_AS(discrete_symbol(SchemeKind::KMod, 1.0, 300.0, 0.01), InvalidCfl);
}

TEST_CASE("symbol_gap matches direct subtraction away from cancellation") {
  const double k = 10.0, h = 1.0 / 16.0;
  for (SchemeKind s : kAllSchemes) {
    for (int m = 1; m < 16; ++m) {
      const double xi = m * M_PI;
      const double direct =
          continuous_symbol(xi, k) - discrete_symbol(s, xi, k, h);
      const double stable = symbol_gap(s, xi, k, h);
      CHECK(std::abs(stable - direct) < 1e-9 * std::max(1.0, std::abs(direct)));
    }
  }
}

TEST_CASE("discrete_wavenumber: oracle value, inverse pair, shift bracket") {
  CHECK(discrete_wavenumber(2.0, 0.1) ==
        doctest::Approx(2.0033484232311958).epsilon(1e-14));
  // (2/h) sin(kh/2) followed by the discrete wavenumber returns k
  const double k = 17.3, h = 1.0 / 37.0;
  const double kt = 2.0 / h * std::sin(k * h / 2.0);
  CHECK(discrete_wavenumber(kt, h) == doctest::Approx(k).epsilon(1e-13));

  const double shift = discrete_wavenumber_shift(10.0, 1.0 / 128.0);
  const double k3h2 = 1000.0 / (128.0 * 128.0);
  CHECK(shift > k3h2 / 24.0);
  CHECK(shift < (M_PI - 2.0) / 8.0 * k3h2);
}

TEST_CASE("wavenumber shift bracket holds across the hypothesis set") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uk(1.0, 400.0);
  std::uniform_real_distribution<double> umu(1e-4, 0.99);
  for (int i = 0; i < 500; ++i) {
    const double k = uk(rng);
    const double h = 2.0 * umu(rng) / k;
    const double shift = discrete_wavenumber_shift(k, h);
    const double k3h2 = k * k * k * h * h;
    CHECK(shift > k3h2 / 24.0);
    CHECK(shift < (M_PI - 2.0) / 8.0 * k3h2);
  }
}

TEST_CASE("tridiagonal vs single-mode spectral formula") {
  const HelmholtzProblem p{2.0, SineSeries({{1, 1.0}}), 0.0, 0.0};
  const DiscreteSolution sol = solve_tridiagonal(SchemeKind::Classical, p, 16);
  const double lam_h = discrete_symbol(SchemeKind::Classical, M_PI, 2.0, 1.0 / 16);
  const GridFunction expect = sample(SineSeries({{1, 1.0 / lam_h}}), 16);
  for (int j = 0; j <= 16; ++j)
    CHECK(std::abs(sol.nodal.values[j] - expect.values[j]) < 1e-12);
}

TEST_CASE("zero-source closed forms") {
  // classical solves to the discrete closed form with shifted wavenumber
  const double k = 10.0;
  const int n = 64;
  const DiscreteSolution classical =
      solve_tridiagonal(SchemeKind::Classical, {k, SineSeries{}, 0.0, 1.0}, n);
  const double kh = discrete_wavenumber(k, 1.0 / n);
  for (int j = 0; j <= n; ++j) {
    const double x = static_cast<double>(j) / n;
    CHECK(std::abs(classical.nodal.values[j] - zero_source_exact(kh, 0.0, 1.0, x)) <
          1e-11);
  }
  // the corrected schemes hit the continuous solution at the nodes
  const DiscreteSolution kmod =
      solve_tridiagonal(SchemeKind::KMod, {k, SineSeries{}, 0.0, 1.0}, n);
  for (int j = 0; j <= n; ++j) {
    const double x = static_cast<double>(j) / n;
    CHECK(std::abs(kmod.nodal.values[j] - zero_source_exact(k, 0.0, 1.0, x)) < 1e-10);
  }
}

TEST_CASE("spectral solve: direct and aliased single modes") {
  const double lam_h = discrete_symbol(SchemeKind::Classical, M_PI, 2.0, 1.0 / 8);
  DiscreteSolution a =
      solve_spectral(SchemeKind::Classical, {2.0, SineSeries({{1, 1.0}}), 0, 0}, 8);
  CHECK(a.interpolant.at(1) == doctest::Approx(1.0 / lam_h).epsilon(1e-14));
  DiscreteSolution b =
      solve_spectral(SchemeKind::Classical, {2.0, SineSeries({{15, 1.0}}), 0, 0}, 8);
  CHECK(b.interpolant.at(1) == doctest::Approx(-1.0 / lam_h).epsilon(1e-14));
}

TEST_CASE("solver equivalence on the four-mode source") {
  const double k = 10.0 * M_PI + 1.0;
  const double c = 1.0 / std::sqrt(2.0);
  const HelmholtzProblem p{k, SineSeries({{10, c}, {20, c}, {40, c}, {80, c}}), 0, 0};
  const DiscreteSolution st = solve_tridiagonal(SchemeKind::Classical, p, 1024);
  const DiscreteSolution ss = solve_spectral(SchemeKind::Classical, p, 1024);
  double scale = 0.0, diff = 0.0;
  for (int j = 0; j <= 1024; ++j) {
    scale = std::max(scale, std::abs(st.nodal.values[j]));
    diff = std::max(diff, std::abs(st.nodal.values[j] - ss.nodal.values[j]));
  }
  CHECK(diff < 1e-11 * scale);
}

TEST_CASE("solver equivalence on random instances") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int done = 0;
  while (done < 20) {
    const int n = 8 + static_cast<int>(u(rng) * 500);
    const double mu = 0.3 + 0.6 * u(rng);
    const double k = 2.0 * mu * n;
    if (sigma_k(k) < 0.05 || wellposedness_margin(k, 1.0 / n) < 0.2) continue;
    const SchemeKind s = kAllSchemes[static_cast<int>(u(rng) * 4)];
    const SineSeries f = oracle::random_series(rng, 5, 3 * n);
    if (f.empty()) continue;
    const HelmholtzProblem p{k, f, 0.0, 0.0};
    const DiscreteSolution st = solve_tridiagonal(s, p, n);
    const DiscreteSolution ss = solve_spectral(s, p, n);
    double scale = 0.0, diff = 0.0;
    for (int j = 0; j <= n; ++j) {
      scale = std::max(scale, std::abs(st.nodal.values[j]));
      diff = std::max(diff, std::abs(st.nodal.values[j] - ss.nodal.values[j]));
    }
    if (scale == 0.0) continue;
    CHECK(diff < 1e-11 * scale);
    ++done;
  }
}

TEST_CASE("interpolant reproduces interior nodal values") {
  std::mt19937_64 rng(31);
  const SineSeries f = oracle::random_series(rng, 6, 100);
  const HelmholtzProblem p{23.7, f, 0.0, 0.0};
  const DiscreteSolution sol = solve_tridiagonal(SchemeKind::Classical, p, 48);
  const GridFunction back = sample(sol.interpolant, 48);
  double scale = 1e-30;
  for (double v : sol.nodal.values) scale = std::max(scale, std::abs(v));
  for (int j = 0; j <= 48; ++j)
    CHECK(std::abs(back.values[j] - sol.nodal.values[j]) < 1e-12 * scale);
}

TEST_CASE("wellposedness_margin values") {
  CHECK(wellposedness_margin(M_PI, 0.5) ==
        doctest::Approx(M_PI - 2.0 * std::sqrt(2.0)).epsilon(1e-12));
  // constructed discrete resonance
  const int n = 10;
  const double h = 1.0 / n;
  const double k = 2.0 / h * std::sin(3 * M_PI * h / 2.0);
  CHECK(wellposedness_margin(k, h) < 1e-14);
}

TEST_CASE("h below h_k implies margin and symbol lower bounds") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> uk(4.0, 200.0);
  int done = 0;
  while (done < 30) {
    const double k = uk(rng);
    const double sig = sigma_k(k);
    if (sig < 0.05) continue;
    const double hk = h_k_bound(k);
    const int n = static_cast<int>(std::ceil(1.0 / hk)) + 1 + done % 7;
    const double h = 1.0 / n;
    REQUIRE(h < hk);
    CHECK(wellposedness_margin(k, h) + 1e-12 >= sig / 2.0);
    const double bound = std::max(2.0 * k - sig / 2.0, k + 2.0 / M_PI) * sig / 2.0;
    CHECK(min_abs_discrete_symbol(SchemeKind::Classical, k, n) + 1e-12 >= bound);
    ++done;
  }
}

TEST_CASE("h_k_bound: frozen value, scaling, near-resonant limit") {
  CHECK(h_k_bound(10.0) == doctest::Approx(0.057010108710619921).epsilon(1e-13));
  // O(sqrt(sigma) k^{-3/2}) scaling with sigma held at 1
  const double r1 = h_k_bound(26 * M_PI - 1) / h_k_bound(7 * M_PI - 1);
  const double r2 = h_k_bound(102 * M_PI - 1) / h_k_bound(26 * M_PI - 1);
  CHECK(std::abs(r1 - 0.125) < 0.15 * 0.125);
  CHECK(std::abs(r2 - 0.125) < 0.15 * 0.125);
  // sigma -> 0 limit formula
  const double k = 3 * M_PI + 1e-6;
  const double limit = 2.0 * std::sqrt(3e-6) / std::pow(4.0 * M_PI, 1.5);
  CHECK(h_k_bound(k) == doctest::Approx(limit).epsilon(1e-3));
}

TEST_CASE("h_k_star_search: dominance and self-consistency") {
  const double h1 = h_k_star_search(10.0, 4096);
  const double h2 = h_k_star_search(10.0, 8192);
  CHECK(h1 == h2);
  for (double k : {4 * M_PI - 1, 7 * M_PI - 1, 11 * M_PI - 1})
    CHECK(h_k_star_search(k, 2048) >= h_k_bound(k));
}

TEST_CASE("preconditions reject bad input") {
  CHECK_THROWS_AS(solve_tridiagonal(SchemeKind::Classical,
                                    {10.0, SineSeries({{1, 1.0}}), 0, 0}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(discrete_wavenumber(300.0, 0.01), InvalidCfl);
  // a discrete resonance must be detected
  const int n = 10;
  const double k = 20.0 * std::sin(3 * M_PI / 20.0);
  CHECK_THROWS_AS(solve_tridiagonal(SchemeKind::Classical,
                                    {k, SineSeries({{1, 1.0}}), 0, 0}, n),
                  DiscreteResonance);
}
