#ifndef HELMFD_EXACT_HPP
#define HELMFD_EXACT_HPP

#include "helmfd/common.hpp"
#include "helmfd/spectral.hpp"

namespace helmfd {

/// u'' + k^2 u = f on (0,1), u(0) = g0, u(1) = g1.  The two admissible
/// configurations are (i) nonzero source with g0 = g1 = 0 and (ii) zero
/// source with boundary data; they are never combined.
struct HelmholtzProblem {
  double k = 1.0;
  SineSeries source;
  double g0 = 0.0;
  double g1 = 0.0;

  bool homogeneous_bc() const { return g0 == 0.0 && g1 == 0.0; }
  /// Throws if k is invalid, too close to a resonance, or if source and
  /// boundary data are mixed.
  void validate() const;
};

/// lambda(xi) = k^2 - xi^2.
double continuous_symbol(double xi, double k);

/// Distance from k to the nearest nonnegative multiple of pi.
double sigma_k(double k);

/// Mode-wise exact solution u_hat = f_hat / lambda for case (i).
SineSeries solve_exact(const HelmholtzProblem& p);

/// Closed-form solution for the zero-source case (ii).
double zero_source_exact(double k, double g0, double g1, double x);

struct A1Norms {
  double l2 = 0.0;
  double h1 = 0.0;
};

/// Intermediate quantities of the closed-form A1 norms.  All terms are
/// evaluated in difference form in delta = k^h - k; the raw trigonometric
/// sums lose every significant digit once delta ~ k^3 h^2 is tiny.
struct ZeroSourceTerms {
  double kh = 0.0;     // discrete wavenumber
  double delta = 0.0;  // k^h - k
  double s1 = 0.0;
  double s2 = 0.0;
  double s1_tilde = 0.0;
  double s2_tilde = 0.0;
  double a1_l2 = 0.0;  // ||A1||
  double a1_h1 = 0.0;  // |A1|_1
};

/// Same as zero_source_terms(k, h) but with the wavenumber shift supplied
/// directly (used for the dispersion-corrected schemes where delta ~ 0).
ZeroSourceTerms zero_source_terms_from_shift(double k, double delta);

ZeroSourceTerms zero_source_terms(double k, double h);

/// (||A1||, |A1|_1) for the classical scheme at (k, h).
A1Norms a1_norms(double k, double h);

/// Pointwise A1(x) = sin(kx)/sin k - sin(k^h x)/sin k^h in a form whose
/// every term is O(delta); delta = k^h - k.  A0(x) = A1(1-x).
double a1_eval(double k, double delta, double x);
double a1_derivative(double k, double delta, double x);

}  // namespace helmfd

#endif  // HELMFD_EXACT_HPP
