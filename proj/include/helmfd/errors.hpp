#ifndef HELMFD_ERRORS_HPP
#define HELMFD_ERRORS_HPP

#include "helmfd/schemes.hpp"

namespace helmfd {

struct ErrorNorms {
  double l2 = 0.0;
  double h1 = 0.0;
};

/// Exact split of the total discretization error u - u^h for a finite-mode
/// source:  e2 holds the solution tail the grid cannot represent
/// (modes >= N), E1 the operator mismatch on represented modes, E2 the
/// folded-in aliases of high source modes.  On modes <= N-1 the total error
/// is E1 - E2; on modes >= N it is u itself.
struct ErrorBreakdown {
  SineSeries e2;
  SineSeries E1;
  SineSeries E2;
  SineSeries total;
  ErrorNorms e2_norms, E1_norms, E2_norms, total_norms;
  ErrorNorms relative;  // total norms divided by ||u|| and |u|_1
  double u_l2 = 0.0;
  double u_h1 = 0.0;
};

ErrorBreakdown decompose(SchemeKind s, const HelmholtzProblem& p, int n_intervals);

struct TotalError {
  double abs_l2 = 0.0;
  double abs_h1 = 0.0;
  double rel_l2 = 0.0;
  double rel_h1 = 0.0;
};

TotalError total_error(SchemeKind s, const HelmholtzProblem& p, int n_intervals);

/// Zero-source (case ii) error norms.  The classical scheme uses the
/// closed-form A1 norms when one boundary value vanishes and dense
/// quadrature of A0 g0 + A1 g1 otherwise; the dispersion-corrected schemes
/// return values at rounding level.
ErrorNorms zero_source_error_norms(SchemeKind s, double k, double h, double g0,
                                   double g1);

/// |u_ref - u^h|_1 with u_ref the solve on a much finer mesh; optional
/// cross-check of the coefficient-space error path.
double reference_error_h1(SchemeKind s, const HelmholtzProblem& p, int n_intervals,
                          int n_reference);

}  // namespace helmfd

#endif  // HELMFD_ERRORS_HPP
