#include "helmfd/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "helmfd/numerics.hpp"

namespace helmfd {

const char* scheme_name(SchemeKind s) {
  switch (s) {
    case SchemeKind::Classical: return "classical";
    case SchemeKind::KMod: return "kmod";
    case SchemeKind::LMod: return "lmod";
    case SchemeKind::LFMod: return "lfmod";
  }
  return "?";
}

std::optional<SchemeKind> scheme_from_name(std::string_view name) {
  if (name == "classical") return SchemeKind::Classical;
  if (name == "kmod") return SchemeKind::KMod;
  if (name == "lmod") return SchemeKind::LMod;
  if (name == "lfmod") return SchemeKind::LFMod;
  return std::nullopt;
}

namespace {

void require_cfl(double k, double h) {
  if (!(k * h / 2.0 < 1.0))
    throw InvalidCfl("corrected scheme requires kh/2 < 1, got kh/2 = " +
                     std::to_string(k * h / 2.0));
}

}  // namespace

double discrete_wavenumber(double k, double h) {
  require_cfl(k, h);
  return 2.0 / h * std::asin(k * h / 2.0);
}

double discrete_wavenumber_shift(double k, double h) {
  require_cfl(k, h);
  return 2.0 / h * num::asin_minus_x(k * h / 2.0);
}

double discrete_symbol(SchemeKind s, double xi, double k, double h) {
  const double st = std::sin(xi * h / 2.0);
  const double lap = (2.0 / h * st) * (2.0 / h * st);  // (4/h^2) sin^2(xi h/2)
  switch (s) {
    case SchemeKind::Classical:
      return k * k - lap;
    case SchemeKind::KMod: {
      require_cfl(k, h);
      const double kt = 2.0 / h * std::sin(k * h / 2.0);
      return kt * kt - lap;
    }
    case SchemeKind::LMod: {
      require_cfl(k, h);
      const double kt = 2.0 / h * std::sin(k * h / 2.0);
      return k * k - (k * k) / (kt * kt) * lap;
    }
    case SchemeKind::LFMod: {
      require_cfl(k, h);
      const double mu = k * h / 2.0;
      const double kt = 2.0 / h * std::sin(mu);
      return std::tan(mu) / mu * (k * k - (k * k) / (kt * kt) * lap);
    }
  }
  return 0.0;
}

double symbol_gap(SchemeKind s, double xi, double k, double h) {
  const double theta = xi * h / 2.0;
  const double mu = k * h / 2.0;
  const double scale = 4.0 / (h * h);
  switch (s) {
    case SchemeKind::Classical:
      // lambda - lambda^h = (4/h^2)(sin^2 theta - theta^2)
      return -scale * num::x2_minus_sin2(theta);
    case SchemeKind::KMod:
      require_cfl(k, h);
      return scale * (num::x2_minus_sin2(mu) - num::x2_minus_sin2(theta));
    case SchemeKind::LMod: {
      require_cfl(k, h);
      const double sm = std::sin(mu);
      const double st = std::sin(theta);
      return scale * (-num::x2_minus_sin2(theta) +
                      num::x2_minus_sin2(mu) * (st * st) / (sm * sm));
    }
    case SchemeKind::LFMod: {
      require_cfl(k, h);
      const double gap_l = symbol_gap(SchemeKind::LMod, xi, k, h);
      const double tau_minus_1 = num::tan_minus_x(mu) / mu;
      return gap_l - tau_minus_1 * discrete_symbol(SchemeKind::LMod, xi, k, h);
    }
  }
  return 0.0;
}

double source_multiplier(SchemeKind s, double k, double h) {
  if (s != SchemeKind::LFMod) return 1.0;
  require_cfl(k, h);
  const double mu = k * h / 2.0;
  return mu / std::tan(mu);
}

double wellposedness_margin(double k, double h) {
  const int n = static_cast<int>(std::lround(1.0 / h));
  double best = std::abs(k);
  for (int m = 1; m < n; ++m) {
    const double s = 2.0 / h * std::sin(m * M_PI * h / 2.0);
    best = std::min(best, std::abs(k - s));
  }
  return best;
}

double min_abs_discrete_symbol(SchemeKind s, double k, int n_intervals) {
  const double h = 1.0 / n_intervals;
  double best = std::numeric_limits<double>::infinity();
  for (int m = 1; m < n_intervals; ++m)
    best = std::min(best, std::abs(discrete_symbol(s, m * M_PI, k, h)));
  return best;
}

namespace {

void require_wellposed(SchemeKind s, double k, int n) {
  const double floor = kDiscreteResonanceRel * k * k;
  const double m = min_abs_discrete_symbol(s, k, n);
  if (m < floor)
    throw DiscreteResonance("discrete symbol vanishes: min |lambda^h| = " +
                            std::to_string(m) + " at N = " + std::to_string(n));
}

}  // namespace

DiscreteSolution solve_tridiagonal(SchemeKind s, const HelmholtzProblem& p,
                                   int n_intervals) {
  p.validate();
  if (n_intervals < 4)
    throw std::invalid_argument("solve_tridiagonal: N must be >= 4");
  const int n = n_intervals;
  const double h = 1.0 / n;
  require_wellposed(s, p.k, n);

  // Stencil coefficients: diag u_j + off (u_{j-1} + u_{j+1}) = mult f_j.
  double diag = 0.0, off = 0.0;
  const double mult = source_multiplier(s, p.k, h);
  switch (s) {
    case SchemeKind::Classical:
      diag = p.k * p.k - 2.0 / (h * h);
      off = 1.0 / (h * h);
      break;
    case SchemeKind::KMod: {
      require_cfl(p.k, h);
      const double kt = 2.0 / h * std::sin(p.k * h / 2.0);
      diag = kt * kt - 2.0 / (h * h);
      off = 1.0 / (h * h);
      break;
    }
    case SchemeKind::LMod:
    case SchemeKind::LFMod: {
      require_cfl(p.k, h);
      const double kt = 2.0 / h * std::sin(p.k * h / 2.0);
      const double scale = (p.k * p.k) / (kt * kt);
      diag = p.k * p.k - scale * 2.0 / (h * h);
      off = scale / (h * h);
      break;
    }
  }

  GridFunction f = sample(p.source, n);
  std::vector<double> rhs(n - 1);
  for (int j = 1; j < n; ++j) rhs[j - 1] = mult * f.values[j];
  rhs[0] -= off * p.g0;
  rhs[n - 2] -= off * p.g1;

  // Thomas elimination, no pivoting; the spectral solver cross-checks it.
  std::vector<double> c_prime(n - 1, 0.0);
  std::vector<double> d_prime(n - 1, 0.0);
  double denom = diag;
  c_prime[0] = off / denom;
  d_prime[0] = rhs[0] / denom;
  for (int i = 1; i < n - 1; ++i) {
    denom = diag - off * c_prime[i - 1];
    c_prime[i] = off / denom;
    d_prime[i] = (rhs[i] - off * d_prime[i - 1]) / denom;
  }
  std::vector<double> u(n - 1);
  u[n - 2] = d_prime[n - 2];
  for (int i = n - 3; i >= 0; --i) u[i] = d_prime[i] - c_prime[i] * u[i + 1];

  DiscreteSolution sol;
  sol.n_intervals = n;
  sol.nodal.n_intervals = n;
  sol.nodal.values.assign(n + 1, 0.0);
  sol.nodal.values[0] = p.g0;
  sol.nodal.values[n] = p.g1;
  for (int j = 1; j < n; ++j) sol.nodal.values[j] = u[j - 1];
  if (p.homogeneous_bc()) sol.interpolant = dst_forward(sol.nodal);
  return sol;
}

DiscreteSolution solve_spectral(SchemeKind s, const HelmholtzProblem& p,
                                int n_intervals) {
  p.validate();
  if (!p.homogeneous_bc())
    throw std::invalid_argument("solve_spectral: requires g0 = g1 = 0");
  if (n_intervals < 4)
    throw std::invalid_argument("solve_spectral: N must be >= 4");
  const int n = n_intervals;
  const double h = 1.0 / n;
  require_wellposed(s, p.k, n);

  const SineSeries fh = alias_coefficients(p.source, n);
  DiscreteSolution sol;
  sol.n_intervals = n;
  for (const auto& [mode, c] : fh.coeffs()) {
    const double lam_h = discrete_symbol(s, mode * M_PI, p.k, h);
    sol.interpolant.set(mode, c / lam_h);
  }
  sol.nodal = sample(sol.interpolant, n);
  return sol;
}

double h_k_bound(double k) {
  const double sig = sigma_k(k);
  if (sig < kSigmaMargin) throw NearResonance("h_k_bound: sigma_k vanishes");
  const double n_plus = std::ceil(k / M_PI);
  const double base = sig / 2.0 + n_plus * M_PI;
  return 2.0 * std::sqrt(3.0 * sig) / (base * std::sqrt(base));
}

double h_k_star_search(double k, int n_max) {
  const double sig = sigma_k(k);
  if (sig < kSigmaMargin) throw NearResonance("h_k_star_search: sigma_k vanishes");
  if (n_max < 2) throw std::invalid_argument("h_k_star_search: N_max must be >= 2");
  int n_star = 2;
  for (int n = n_max; n >= 2; --n) {
    if (wellposedness_margin(k, 1.0 / n) >= sig / 2.0) continue;
    n_star = n + 1;
    break;
  }
  if (n_star > n_max)
    throw SearchExhausted("h_k_star_search: no all-pass suffix within N_max = " +
                          std::to_string(n_max));
  return 1.0 / n_star;
}

}  // namespace helmfd
