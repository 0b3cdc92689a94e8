#ifndef HELMFD_BOUNDS_HPP
#define HELMFD_BOUNDS_HPP

#include <map>
#include <string>
#include <vector>

#include "helmfd/errors.hpp"
#include "helmfd/symbols.hpp"

namespace helmfd {

/// One certified inequality: hypotheses checked, then
/// lower < value < upper with a strictness slack of
/// 1e-13 * max(|lower|, |upper|, 1).  One-sided bounds carry +-inf on the
/// open side.  Entries whose hypothesis set or guard does not apply are
/// "skipped", never "failed".
struct BoundResult {
  enum class Status { Pass, Fail, Skipped };

  std::string lemma_id;
  std::map<std::string, double> params;
  double lower = 0.0;
  double value = 0.0;
  double upper = 0.0;
  bool hypotheses_ok = true;
  bool pass = false;
  std::string note;

  Status status() const {
    if (!hypotheses_ok) return Status::Skipped;
    return pass ? Status::Pass : Status::Fail;
  }
};

const char* status_name(BoundResult::Status s);

struct BoundReport {
  std::vector<BoundResult> results;
  bool all_pass = true;  // no entry failed (skips allowed, listed separately)
  int n_pass = 0;
  int n_fail = 0;
  int n_skipped = 0;

  void add(std::vector<BoundResult> batch);
  void finalize();  // sorts deterministically and recounts
};

/// Zero-source machinery: the sine lower bound, the wavenumber-shift
/// bracket, the four S-term brackets, the two-sided A1 norm brackets and
/// the relative-error equality cases.  c is the shift-smallness parameter,
/// required to satisfy k^3 h^2 (pi-2) / (8 sigma_k) < c < 1.
std::vector<BoundResult> check_zero_source(double k, double h, double c);

/// Downsampling and aliasing estimates, absolute and relative, for a finite
/// source f of nominal smoothness p.  sigma_tilde < 0 selects the default
/// sigma_k / 2.
std::vector<BoundResult> check_sampling_errors(double k, double h,
                                               const SineSeries& f, int p,
                                               double sigma_tilde = -1.0);

/// Candidate-frequency brackets for psi, psi_e, psi_rel of the classical
/// scheme, the evanescent minimum, and the well-posedness bounds.
std::vector<BoundResult> check_operator_bounds(double k, double h,
                                               double sigma_tilde = -1.0);

/// Total-error bounds (absolute and relative) plus the sharp equality
/// cases built from single-mode sources.
std::vector<BoundResult> check_total_error_bounds(double k, double h,
                                                  const SineSeries& f, int p,
                                                  double sigma_tilde = -1.0);

struct BoundSweepConfig {
  struct Entry {
    double k = 10.0;
    int n_intervals = 64;
    double c = 0.5;
    int p = 2;
    SineSeries source;
    double sigma_tilde = -1.0;
  };
  std::vector<Entry> entries;

  /// k in {7, 10, 10 pi + 1, 20 pi + 1} x N in {64, 128, 256, 512} with the
  /// four-mode unit-norm source.  The coarse large-k pairs exercise the
  /// guarded candidate brackets; the fine pairs the shift-smallness ones.
  static BoundSweepConfig default_sweep();
};

BoundReport run_all(const BoundSweepConfig& config);

/// Line-oriented serialization: "lemma_id, k, h, lower, value, upper, status".
std::string to_lines(const BoundReport& report);

}  // namespace helmfd

#endif  // HELMFD_BOUNDS_HPP
