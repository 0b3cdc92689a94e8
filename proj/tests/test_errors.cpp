#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "helmfd/errors.hpp"
#include "helmfd/symbols.hpp"
#include "oracles.hpp"

using namespace helmfd;

namespace {

SineSeries four_mode_source() {
  const double c = 1.0 / std::sqrt(2.0);
  return SineSeries({{10, c}, {20, c}, {40, c}, {80, c}});
}

}  // namespace

TEST_CASE("decompose: all-low source has no tail and no aliases") {
  const HelmholtzProblem p{10.0, SineSeries({{1, 1.0}, {5, -0.5}}), 0, 0};
  const ErrorBreakdown b = decompose(SchemeKind::Classical, p, 32);
  CHECK(b.e2.empty());
  CHECK(b.E2.empty());
  CHECK(oracle::max_abs_coeff_diff(b.total, b.E1) == 0.0);
}

TEST_CASE("decompose: single high mode bookkeeping") {
  const int n = 32;
  const HelmholtzProblem p{10.0, SineSeries({{n + 2, 1.0}}), 0, 0};
  const ErrorBreakdown b = decompose(SchemeKind::Classical, p, n);
  CHECK(b.E1.empty());
  REQUIRE(b.E2.size() == 1);
  // mode N+2 reflects onto N-2 with flipped sign
  const double lam_h =
      discrete_symbol(SchemeKind::Classical, (n - 2) * M_PI, 10.0, 1.0 / n);
  CHECK(b.E2.at(n - 2) == doctest::Approx(-1.0 / lam_h).epsilon(1e-13));
  REQUIRE(b.e2.size() == 1);
  const double lam = continuous_symbol((n + 2) * M_PI, 10.0);
  CHECK(b.e2.at(n + 2) == doctest::Approx(1.0 / lam).epsilon(1e-13));
}

TEST_CASE("decomposition identity against the spectral solver") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int done = 0;
  while (done < 100) {
    const int n = 16 + static_cast<int>(u(rng) * 200);
    const double k = 2.0 * (0.2 + 0.6 * u(rng)) * n;
    if (sigma_k(k) < 0.05 || wellposedness_margin(k, 1.0 / n) < 0.1) continue;
    const SchemeKind s = kAllSchemes[static_cast<int>(u(rng) * 4)];
    const SineSeries f = oracle::random_series(rng, 6, 3 * n);
    if (f.empty()) continue;
    const HelmholtzProblem p{k, f, 0.0, 0.0};
    ErrorBreakdown b;
    DiscreteSolution sol;
    try {
      b = decompose(s, p, n);
      sol = solve_spectral(s, p, n);
    } catch (const std::exception&) {
      continue;
    }
    SineSeries expect = solve_exact(p);
    expect -= sol.interpolant;
    CHECK(oracle::max_abs_coeff_diff(expect, b.total) < 1e-12);
    // triangle consistency
    CHECK(b.total_norms.l2 <=
          b.e2_norms.l2 + b.E1_norms.l2 + b.E2_norms.l2 + 1e-12);
    ++done;
  }
}

TEST_CASE("total H1 error matches the fine-reference path within 2%") {
  const double k = 10.0 * M_PI + 1.0;
  const HelmholtzProblem p{k, four_mode_source(), 0, 0};
  const ErrorBreakdown b = decompose(SchemeKind::Classical, p, 128);
  const int n_ref = static_cast<int>(std::lround(8.0 * k * k));
  const double ref = reference_error_h1(SchemeKind::Classical, p, 128, n_ref);
  CHECK(b.total_norms.h1 == doctest::Approx(ref).epsilon(0.02));
}

TEST_CASE("total_error: single sharp mode has equal relative norms") {
  const double k = 20.0 * M_PI + 1.0;
  const int n = 256;
  const CandidateSet cs = candidates(k, 1.0 / n);
  const HelmholtzProblem p{k, SineSeries({{cs.kh_plus.mode, 2.0}}), 0, 0};
  const TotalError t = total_error(SchemeKind::Classical, p, n);
  CHECK(t.rel_l2 == doctest::Approx(t.rel_h1).epsilon(1e-12));
}

TEST_CASE("total_error: zero source gives zeros; corrected schemes win in max psi_e") {
  const TotalError z = total_error(SchemeKind::Classical, {10.0, SineSeries{}, 0, 0}, 64);
  CHECK(z.abs_l2 == 0.0);
  CHECK(z.abs_h1 == 0.0);
  CHECK(z.rel_l2 == 0.0);
  CHECK(z.rel_h1 == 0.0);
  // the dispersion-corrected schemes have strictly lower max psi_e
  const double k = 10.0, h = 1.0 / 64.0;
  const double cl = argmax_scan(SchemeKind::Classical, SymbolErrorKind::PsiE, k, h).value;
  const double km = argmax_scan(SchemeKind::KMod, SymbolErrorKind::PsiE, k, h).value;
  CHECK(km < cl);
}

TEST_CASE("zero-source error norms per scheme") {
  const double k = 10.0, h = 1.0 / 64.0;
  const ErrorNorms cl = zero_source_error_norms(SchemeKind::Classical, k, h, 0.0, 1.0);
  const A1Norms a = a1_norms(k, h);
  CHECK(cl.l2 == doctest::Approx(a.l2).epsilon(1e-14));
  CHECK(cl.h1 == doctest::Approx(a.h1).epsilon(1e-14));
  // reflection symmetry
  const ErrorNorms swapped =
      zero_source_error_norms(SchemeKind::Classical, k, h, 1.0, 0.0);
  CHECK(swapped.l2 == doctest::Approx(cl.l2).epsilon(1e-14));
  CHECK(swapped.h1 == doctest::Approx(cl.h1).epsilon(1e-14));
  // corrected schemes are exact for zero source
  for (SchemeKind s : {SchemeKind::KMod, SchemeKind::LMod}) {
    const ErrorNorms e = zero_source_error_norms(s, k, h, 0.0, 1.0);
    CHECK(e.l2 <= 1e-10);
    CHECK(e.h1 <= 1e-10 * k);
  }
}

TEST_CASE("zero-source quadrature branch matches the closed form when separable") {
  // with both boundary values nonzero the norms come from dense quadrature;
  // cross-check totals via the triangle of the separable cases
  const double k = 10.0, h = 1.0 / 32.0;
  const ErrorNorms both = zero_source_error_norms(SchemeKind::Classical, k, h, 0.7, -1.3);
  const double delta = discrete_wavenumber_shift(k, h);
  auto e2 = [&](double x) {
    const double v = 0.7 * a1_eval(k, delta, 1.0 - x) - 1.3 * a1_eval(k, delta, x);
    return v * v;
  };
  const double quad = std::sqrt(oracle::simpson(e2, 200000));
  CHECK(both.l2 == doctest::Approx(quad).epsilon(1e-9));
}

TEST_CASE("order law: error ratio ~8 between doubled wavenumbers at matched h") {
  const SineSeries f = four_mode_source();
  const double k1 = 10.0 * M_PI + 1.0, k2 = 20.0 * M_PI + 1.0;
  const int n = 2048;
  const double e1 =
      total_error(SchemeKind::Classical, {k1, f, 0, 0}, n).abs_h1;
  const double e2 =
      total_error(SchemeKind::Classical, {k2, f, 0, 0}, n).abs_h1;
  CHECK(e2 / e1 > 5.0);
  CHECK(e2 / e1 < 12.0);
  // cross-curve pair: k x4, h x 1/8 lands at the same height within 30%
  const double k3 = 40.0 * M_PI + 1.0;
  const double a = total_error(SchemeKind::Classical, {k1, f, 0, 0}, 256).abs_h1;
  const double b = total_error(SchemeKind::Classical, {k3, f, 0, 0}, 2048).abs_h1;
  CHECK(a / b > 0.7);
  CHECK(a / b < 1.3);
}
