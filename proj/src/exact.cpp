#include "helmfd/exact.hpp"

#include <cmath>

#include "helmfd/numerics.hpp"
#include "helmfd/schemes.hpp"

namespace helmfd {

void HelmholtzProblem::validate() const {
  if (!(k > 0.0)) throw std::invalid_argument("HelmholtzProblem: k must be > 0");
  if (sigma_k(k) < kSigmaMargin)
    throw NearResonance("HelmholtzProblem: k within margin of a resonance");
  if (!source.empty() && !homogeneous_bc())
    throw std::invalid_argument(
        "HelmholtzProblem: nonzero source requires g0 = g1 = 0");
}

double continuous_symbol(double xi, double k) { return (k - xi) * (k + xi); }

double sigma_k(double k) {
  double n = std::round(k / M_PI);
  if (n < 0.0) n = 0.0;
  return std::abs(k - n * M_PI);
}

SineSeries solve_exact(const HelmholtzProblem& p) {
  p.validate();
  if (!p.homogeneous_bc())
    throw std::invalid_argument("solve_exact: requires g0 = g1 = 0");
  SineSeries u;
  for (const auto& [mode, c] : p.source.coeffs()) {
    const double lam = continuous_symbol(mode * M_PI, p.k);
    if (std::abs(lam) < kDiscreteResonanceRel * p.k * p.k)
      throw ResonantMode("solve_exact: source mode " + std::to_string(mode) +
                         " is resonant");
    u.set(mode, c / lam);
  }
  return u;
}

double zero_source_exact(double k, double g0, double g1, double x) {
  const double sk = std::sin(k);
  if (std::abs(sk) <= kSinMargin)
    throw NearResonance("zero_source_exact: sin k vanishes");
  return (g1 - g0 * std::cos(k)) / sk * std::sin(k * x) + g0 * std::cos(k * x);
}

ZeroSourceTerms zero_source_terms_from_shift(double k, double delta) {
  const double kh = k + delta;
  const double sk = std::sin(k);
  const double skh = std::sin(kh);
  if (std::abs(sk) <= kSinMargin || std::abs(skh) <= kSinMargin)
    throw NearResonance("zero_source_terms: sine denominator vanishes");

  ZeroSourceTerms t;
  t.kh = kh;
  t.delta = delta;
  const double ss = sk * skh;
  const double sd = num::sin_small(delta);
  const double cd = num::cos_small(delta);

  // S1 = 1/2 sin(d) (cot k - cot k^h) + cos d - sinc d, and
  // cot k - cot k^h = sin(d) / (sin k sin k^h).
  t.s1 = 0.5 * sd * sd / ss + num::cos_minus_sinc(delta);
  t.s2 = delta / (2.0 * (k + kh)) * (-sd / k - delta / (k * kh) * sk * std::cos(kh));
  t.s1_tilde =
      t.s1 + delta * (-sd * (std::cos(k) / sk / (2.0 * kh) +
                             std::cos(kh) / skh / (2.0 * k)) +
                      cd * delta / (2.0 * k * kh));
  t.s2_tilde =
      delta / (2.0 * (k + kh)) * (-sd / k + delta / (k * kh) * skh * std::cos(k));

  t.a1_l2 = std::sqrt(std::max(0.0, (t.s1 + t.s2) / ss));
  t.a1_h1 = std::sqrt(std::max(0.0, k * kh / ss * (t.s1_tilde + t.s2_tilde)));
  return t;
}

ZeroSourceTerms zero_source_terms(double k, double h) {
  if (!(k > 0.0) || !(h > 0.0) || !(k * h / 2.0 < 1.0))
    throw InvalidCfl("zero_source_terms: requires 0 < kh/2 < 1");
  return zero_source_terms_from_shift(k, discrete_wavenumber_shift(k, h));
}

A1Norms a1_norms(double k, double h) {
  const ZeroSourceTerms t = zero_source_terms(k, h);
  return {t.a1_l2, t.a1_h1};
}

double a1_eval(double k, double delta, double x) {
  const double kh = k + delta;
  const double sk = std::sin(k);
  const double skh = std::sin(kh);
  const double mid = k + delta / 2.0;  // (k + k^h) / 2
  const double num = std::sin(mid * (x - 1.0)) * num::sin_small(delta * (x + 1.0) / 2.0) -
                     std::sin(mid * (x + 1.0)) * num::sin_small(delta * (x - 1.0) / 2.0);
  return num / (sk * skh);
}

double a1_derivative(double k, double delta, double x) {
  const double kh = k + delta;
  const double sk = std::sin(k);
  const double skh = std::sin(kh);
  const double mid = k + delta / 2.0;
  const double cross =
      std::cos(mid * (1.0 + x)) * num::sin_small(delta * (1.0 - x) / 2.0) +
      std::cos(mid * (x - 1.0)) * num::sin_small(delta * (x + 1.0) / 2.0);
  return (k * cross - delta * std::cos(kh * x) * sk) / (sk * skh);
}

}  // namespace helmfd
