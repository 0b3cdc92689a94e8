#ifndef HELMFD_SYMBOLS_HPP
#define HELMFD_SYMBOLS_HPP

#include <vector>

#include "helmfd/schemes.hpp"

namespace helmfd {

/// Per-frequency record.  psi = |xi/lambda - xi/lambda^h| controls the H1
/// error, psi_e = |1/lambda - 1/lambda^h| the L2 error, and
/// psi_rel = |(lambda - lambda^h)/(xi^2 lambda^h)| the relative error.
/// psi = xi * psi_e identically.
struct SymbolRow {
  double xi = 0.0;
  double lambda = 0.0;
  double lambda_h = 0.0;
  double psi = 0.0;
  double psi_e = 0.0;
  double psi_rel = 0.0;
  bool resonant = false;  // a symbol vanished within margin; errors are inf
};

/// Throws ResonantFrequency when either symbol vanishes within margin.
SymbolRow symbol_errors(SchemeKind s, double xi, double k, double h);

enum class SymbolErrorKind { Psi, PsiE, PsiRel };

struct Candidate {
  double xi = 0.0;
  int mode = 0;
  bool present = false;  // inside {1..N-1} pi
};

/// The five frequencies at which the classical scheme's symbol-error maxima
/// are attained: the pi-multiples bracketing k and k^h, and (N-1) pi.
/// When no pi-multiple lies in (k, k^h) the two pairs coincide.
struct CandidateSet {
  Candidate k_minus, k_plus, kh_minus, kh_plus, xi_max;
  bool kh_collapsed = false;  // pi N intersect (k, k^h) is empty
  double sigma_minus = 0.0;   // k - k_minus
  double sigma_plus = 0.0;    // k_plus - k
  double sigma_minus_h = 0.0; // k^h - kh_minus
  double sigma_plus_h = 0.0;  // kh_plus - k^h

  std::vector<int> modes() const;  // unique present modes, ascending
};

/// Throws HypothesisViolated naming the violated condition.  sigma_tilde
/// defaults to sigma_k / 2 when negative.
CandidateSet candidates(double k, double h, double sigma_tilde = -1.0);

struct ArgmaxResult {
  double xi = 0.0;
  int mode = 0;
  double value = 0.0;
  bool candidate_checked = false;  // hypothesis set held, membership asserted
  bool in_candidates = false;
};

/// Full scan over xi in {1..N-1} pi; ties break toward the smallest xi.
/// For the classical scheme the maximizer is checked against the candidate
/// set of the applicable result when its hypotheses hold.
ArgmaxResult argmax_scan(SchemeKind s, SymbolErrorKind which, double k, double h,
                         double sigma_tilde = -1.0);

struct MinResult {
  double xi = 0.0;
  int mode = 0;
  double value = 0.0;
};

/// Minimizer of the classical psi_e over grid frequencies in (k, pi/h],
/// located by ternary search on the convex tail and verified by full scan.
MinResult xi_e_min(double k, double h);

enum class ShapeKind { Phi, PhiE, PhiRel };

struct ProbeResult {
  bool pass = false;        // pattern is (nonincreasing)*(nondecreasing)*
  int sign_changes = 0;     // falling->rising transitions
  double trough_theta = 0.0;
  double min_value = 0.0;
  int samples = 0;
};

/// Samples the scaled symbol-error profile phi / phi_e / phi_rel on a
/// uniform theta-grid over (arcsin mu, pi/2) and checks that the successive
/// differences show at most one trough and no interior peak.  A dead band of
/// 1e-14 relative absorbs rounding jitter.
ProbeResult shape_probe(ShapeKind which, double mu, int samples);

/// One row per grid frequency, sorted by xi.  Resonant rows are flagged and
/// carry infinities instead of aborting the table.
std::vector<SymbolRow> symbol_table(SchemeKind s, double k, double h);

}  // namespace helmfd

#endif  // HELMFD_SYMBOLS_HPP
