#include "helmfd/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "helmfd/numerics.hpp"

namespace helmfd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

SymbolRow make_row(SchemeKind s, double xi, double k, double h) {
  SymbolRow row;
  row.xi = xi;
  row.lambda = continuous_symbol(xi, k);
  row.lambda_h = discrete_symbol(s, xi, k, h);
  const double floor = kSymbolResonanceRel * k * k;
  if (std::abs(row.lambda) < floor || std::abs(row.lambda_h) < floor) {
    row.resonant = true;
    row.psi = row.psi_e = row.psi_rel = kInf;
    return row;
  }
  const double gap = symbol_gap(s, xi, k, h);  // lambda - lambda^h
  row.psi_e = std::abs(gap / (row.lambda * row.lambda_h));
  row.psi = xi * row.psi_e;
  row.psi_rel = std::abs(gap / (xi * xi * row.lambda_h));
  return row;
}

double row_value(const SymbolRow& row, SymbolErrorKind which) {
  switch (which) {
    case SymbolErrorKind::Psi: return row.psi;
    case SymbolErrorKind::PsiE: return row.psi_e;
    case SymbolErrorKind::PsiRel: return row.psi_rel;
  }
  return 0.0;
}

}  // namespace

SymbolRow symbol_errors(SchemeKind s, double xi, double k, double h) {
  SymbolRow row = make_row(s, xi, k, h);
  if (row.resonant)
    throw ResonantFrequency("symbol_errors: symbol vanishes at xi = " +
                            std::to_string(xi));
  return row;
}

std::vector<int> CandidateSet::modes() const {
  std::vector<int> out;
  for (const Candidate* c : {&k_minus, &k_plus, &kh_minus, &kh_plus, &xi_max})
    if (c->present) out.push_back(c->mode);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CandidateSet candidates(double k, double h, double sigma_tilde) {
  const int n = static_cast<int>(std::lround(1.0 / h));
  const double mu = k * h / 2.0;
  if (!(k > 2.0 * M_PI)) throw HypothesisViolated("candidates: requires k > 2 pi");
  if (!(mu < 1.0)) throw HypothesisViolated("candidates: requires kh/2 < 1");
  if (n < 4) throw HypothesisViolated("candidates: requires N >= 4");
  const double sig = sigma_k(k);
  if (sig < kSigmaMargin) throw HypothesisViolated("candidates: sigma_k = 0");
  if (sigma_tilde < 0.0) sigma_tilde = sig / 2.0;
  if (wellposedness_margin(k, h) < sigma_tilde)
    throw HypothesisViolated("candidates: sigma_k^h < sigma_tilde");

  CandidateSet cs;
  const int n_lo = static_cast<int>(std::floor(k / M_PI));
  const double kh = discrete_wavenumber(k, h);
  const int m_lo = static_cast<int>(std::floor(kh / M_PI));
  auto fill = [&](Candidate& c, int mode) {
    c.mode = mode;
    c.xi = mode * M_PI;
    c.present = mode >= 1 && mode <= n - 1;
  };
  fill(cs.k_minus, n_lo);
  fill(cs.k_plus, n_lo + 1);
  fill(cs.kh_minus, m_lo);
  fill(cs.kh_plus, m_lo + 1);
  fill(cs.xi_max, n - 1);
  cs.kh_collapsed = (m_lo == n_lo);
  cs.sigma_minus = k - cs.k_minus.xi;
  cs.sigma_plus = cs.k_plus.xi - k;
  cs.sigma_minus_h = kh - cs.kh_minus.xi;
  cs.sigma_plus_h = cs.kh_plus.xi - kh;
  return cs;
}

ArgmaxResult argmax_scan(SchemeKind s, SymbolErrorKind which, double k, double h,
                         double sigma_tilde) {
  const int n = static_cast<int>(std::lround(1.0 / h));
  if (n < 2) throw std::invalid_argument("argmax_scan: N must be >= 2");
  ArgmaxResult best;
  best.value = -kInf;
  for (int m = 1; m < n; ++m) {
    const SymbolRow row = make_row(s, m * M_PI, k, h);
    const double v = row_value(row, which);
    if (v > best.value) {
      best.value = v;
      best.mode = m;
      best.xi = row.xi;
    }
  }
  if (s != SchemeKind::Classical) return best;

  // Candidate membership for the classical scheme, when the applicable
  // hypothesis set holds.
  try {
    const CandidateSet cs = candidates(k, h, sigma_tilde);
    if (which == SymbolErrorKind::PsiRel) {
      const double mu = k * h / 2.0;
      if (!(mu <= 0.75) || !(h < 1.0 / (2.0 * M_PI)))
        return best;  // outside the psi_rel hypothesis set
      best.candidate_checked = true;
      best.in_candidates = best.mode == cs.kh_minus.mode ||
                           best.mode == cs.kh_plus.mode ||
                           best.mode == cs.xi_max.mode;
    } else {
      best.candidate_checked = true;
      const auto modes = cs.modes();
      best.in_candidates =
          std::find(modes.begin(), modes.end(), best.mode) != modes.end();
    }
  } catch (const HypothesisViolated&) {
    best.candidate_checked = false;
  }
  return best;
}

MinResult xi_e_min(double k, double h) {
  const int n = static_cast<int>(std::lround(1.0 / h));
  const int lo = static_cast<int>(std::floor(k / M_PI)) + 1;  // first mode > k
  if (lo > n)
    throw HypothesisViolated("xi_e_min: no grid frequency above k");

  auto value = [&](int m) {
    const SymbolRow row = make_row(SchemeKind::Classical, m * M_PI, k, h);
    return row.psi_e;
  };

  // Full scan (the range is O(N) and this is the reference result).
  MinResult scan;
  scan.value = kInf;
  for (int m = lo; m <= n; ++m) {
    const double v = value(m);
    if (v < scan.value) {
      scan.value = v;
      scan.mode = m;
      scan.xi = m * M_PI;
    }
  }

  // Ternary search exploiting convexity of psi_e on (k, pi/h]; cross-check.
  int a = lo, b = n;
  while (b - a > 2) {
    const int m1 = a + (b - a) / 3;
    const int m2 = b - (b - a) / 3;
    if (value(m1) <= value(m2))
      b = m2;
    else
      a = m1;
  }
  MinResult tern;
  tern.value = kInf;
  for (int m = a; m <= b; ++m) {
    const double v = value(m);
    if (v < tern.value) {
      tern.value = v;
      tern.mode = m;
      tern.xi = m * M_PI;
    }
  }
  // A float-flat tie between adjacent modes is not a convexity failure.
  if (tern.mode != scan.mode && !(tern.value <= scan.value * (1.0 + 1e-12)))
    throw HypothesisViolated(
        "xi_e_min: ternary search disagrees with scan (psi_e not convex here)");
  return scan;
}

namespace {

double shape_value(ShapeKind which, double theta, double mu) {
  const double diff = num::x2_minus_sin2(theta);  // theta^2 - sin^2 theta
  const double st = std::sin(theta);
  const double evan = st * st - mu * mu;          // > 0 for theta > arcsin(mu)
  switch (which) {
    case ShapeKind::Phi: return theta * diff / (evan * (theta * theta - mu * mu));
    case ShapeKind::PhiE: return diff / (evan * (theta * theta - mu * mu));
    case ShapeKind::PhiRel: return diff / (theta * theta * evan);
  }
  return 0.0;
}

}  // namespace

ProbeResult shape_probe(ShapeKind which, double mu, int samples) {
  if (!(mu > 0.0) || !(mu < 1.0))
    throw std::invalid_argument("shape_probe: mu must be in (0,1)");
  if (samples < 10) throw std::invalid_argument("shape_probe: too few samples");
  const double theta_k = std::asin(mu);
  const double width = M_PI / 2.0 - theta_k;

  ProbeResult res;
  res.samples = samples;
  res.pass = true;
  res.min_value = kInf;
  res.trough_theta = theta_k;

  bool rising_seen = false;
  double prev = 0.0;
  for (int i = 1; i <= samples; ++i) {
    const double theta = theta_k + width * i / (samples + 1);
    const double v = shape_value(which, theta, mu);
    if (v < res.min_value) {
      res.min_value = v;
      res.trough_theta = theta;
    }
    if (i > 1) {
      const double band = 1e-14 * std::max(std::abs(v), std::abs(prev));
      const double d = v - prev;
      if (d > band) {
        if (!rising_seen) {
          rising_seen = true;
          ++res.sign_changes;
        }
      } else if (d < -band && rising_seen) {
        res.pass = false;  // a fall after a rise: interior local maximum
        rising_seen = false;
      }
    }
    prev = v;
  }
  return res;
}

std::vector<SymbolRow> symbol_table(SchemeKind s, double k, double h) {
  const int n = static_cast<int>(std::lround(1.0 / h));
  if (n < 2) throw std::invalid_argument("symbol_table: N must be >= 2");
  std::vector<SymbolRow> rows;
  rows.reserve(n - 1);
  for (int m = 1; m < n; ++m) rows.push_back(make_row(s, m * M_PI, k, h));
  return rows;
}

}  // namespace helmfd
