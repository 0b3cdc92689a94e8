#include "helmfd/errors.hpp"

#include <cmath>

#include "helmfd/numerics.hpp"

namespace helmfd {

ErrorBreakdown decompose(SchemeKind s, const HelmholtzProblem& p, int n_intervals) {
  p.validate();
  if (!p.homogeneous_bc())
    throw std::invalid_argument("decompose: requires g0 = g1 = 0");
  const int n = n_intervals;
  const double h = 1.0 / n;

  ErrorBreakdown out;
  const SineSeries u_hat = solve_exact(p);
  auto [u_low, u_high] = split_low_high(u_hat, n);
  out.e2 = u_high;

  const auto [f_low, f_high] = split_low_high(p.source, n);

  // Operator part: (1/lambda - 1/lambda^h_s) f_hat on represented modes.
  for (const auto& [mode, c] : f_low.coeffs()) {
    const double xi = mode * M_PI;
    const double lam = continuous_symbol(xi, p.k);
    const double lam_h = discrete_symbol(s, xi, p.k, h);
    const double floor = kDiscreteResonanceRel * p.k * p.k;
    if (std::abs(lam) < floor)
      throw ResonantMode("decompose: continuous symbol vanishes");
    if (std::abs(lam_h) < floor)
      throw DiscreteResonance("decompose: discrete symbol vanishes");
    const double gap = symbol_gap(s, xi, p.k, h);  // lambda - lambda^h
    out.E1.set(mode, -gap / (lam * lam_h) * c);
  }

  // Aliasing part: folded-in high-mode contributions over lambda^h_s.
  SineSeries alias_extra = alias_coefficients(p.source, n);
  alias_extra -= f_low;
  for (const auto& [mode, c] : alias_extra.coeffs()) {
    const double xi = mode * M_PI;
    const double lam_h = discrete_symbol(s, xi, p.k, h);
    if (std::abs(lam_h) < kDiscreteResonanceRel * p.k * p.k)
      throw DiscreteResonance("decompose: discrete symbol vanishes");
    out.E2.set(mode, c / lam_h);
  }

  out.total = out.E1;
  out.total -= out.E2;
  out.total += out.e2;

  out.e2_norms = {seminorm(out.e2, 0), seminorm(out.e2, 1)};
  out.E1_norms = {seminorm(out.E1, 0), seminorm(out.E1, 1)};
  out.E2_norms = {seminorm(out.E2, 0), seminorm(out.E2, 1)};
  out.total_norms = {seminorm(out.total, 0), seminorm(out.total, 1)};
  out.u_l2 = seminorm(u_hat, 0);
  out.u_h1 = seminorm(u_hat, 1);
  if (!p.source.empty()) {
    if (out.u_l2 < 1e-300) throw DegenerateExact("decompose: ||u|| vanishes");
    out.relative = {out.total_norms.l2 / out.u_l2, out.total_norms.h1 / out.u_h1};
  }
  return out;
}

TotalError total_error(SchemeKind s, const HelmholtzProblem& p, int n_intervals) {
  const ErrorBreakdown b = decompose(s, p, n_intervals);
  TotalError t;
  t.abs_l2 = b.total_norms.l2;
  t.abs_h1 = b.total_norms.h1;
  t.rel_l2 = b.relative.l2;
  t.rel_h1 = b.relative.h1;
  return t;
}

namespace {

double scheme_shift(SchemeKind s, double k, double h) {
  if (s == SchemeKind::Classical) return discrete_wavenumber_shift(k, h);
  // Corrected schemes: the effective discrete wavenumber is
  // (2/h) arcsin(sin(kh/2)) = k; the residual shift is rounding noise.
  const double mu = k * h / 2.0;
  return 2.0 / h * (std::asin(std::sin(mu)) - mu);
}

// Composite Simpson on [0,1] with an even number of panels.
template <typename F>
double simpson(F&& f, int panels) {
  if (panels % 2 != 0) ++panels;
  const double dx = 1.0 / panels;
  double acc = f(0.0) + f(1.0);
  for (int i = 1; i < panels; ++i) acc += f(i * dx) * (i % 2 == 1 ? 4.0 : 2.0);
  return acc * dx / 3.0;
}

}  // namespace

ErrorNorms zero_source_error_norms(SchemeKind s, double k, double h, double g0,
                                   double g1) {
  const double delta = scheme_shift(s, k, h);
  if (g0 == 0.0 || g1 == 0.0) {
    const ZeroSourceTerms t = zero_source_terms_from_shift(k, delta);
    const double w = std::abs(g0) + std::abs(g1);
    return {t.a1_l2 * w, t.a1_h1 * w};
  }
  // General boundary data: e(x) = g0 A1(1-x) + g1 A1(x).
  const int panels = 100000;
  auto e2 = [&](double x) {
    const double v = g0 * a1_eval(k, delta, 1.0 - x) + g1 * a1_eval(k, delta, x);
    return v * v;
  };
  auto de2 = [&](double x) {
    const double v =
        -g0 * a1_derivative(k, delta, 1.0 - x) + g1 * a1_derivative(k, delta, x);
    return v * v;
  };
  return {std::sqrt(std::max(0.0, simpson(e2, panels))),
          std::sqrt(std::max(0.0, simpson(de2, panels)))};
}

double reference_error_h1(SchemeKind s, const HelmholtzProblem& p, int n_intervals,
                          int n_reference) {
  if (n_reference <= n_intervals)
    throw std::invalid_argument("reference_error_h1: N_ref must exceed N");
  if (!p.homogeneous_bc())
    throw std::invalid_argument("reference_error_h1: requires g0 = g1 = 0");
  const DiscreteSolution coarse = solve_tridiagonal(s, p, n_intervals);
  const DiscreteSolution fine = solve_tridiagonal(s, p, n_reference);
  SineSeries diff = fine.interpolant;
  diff -= coarse.interpolant;
  return seminorm(diff, 1);
}

}  // namespace helmfd
