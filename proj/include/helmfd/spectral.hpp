#ifndef HELMFD_SPECTRAL_HPP
#define HELMFD_SPECTRAL_HPP

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "helmfd/common.hpp"

namespace helmfd {

/// Finite sine series sum_n c_n sin(n pi x) on (0,1).  Mode indices are
/// positive integers (frequency xi = n pi); zero coefficients are never
/// stored.  This is the shared representation of sources, solutions and
/// error components, so all norms and alias sums are finite and exact.
class SineSeries {
 public:
  SineSeries() = default;
  explicit SineSeries(std::map<int, double> coeffs);

  /// Parses a comma-separated "n:coeff" list, e.g. "10:0.3,20:-0.7".
  static SineSeries parse(std::string_view spec);

  void set(int mode, double coeff);
  void add(int mode, double coeff);
  double at(int mode) const;

  const std::map<int, double>& coeffs() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }
  int max_mode() const;

  SineSeries& operator+=(const SineSeries& other);
  SineSeries& operator-=(const SineSeries& other);
  SineSeries& operator*=(double scale);
  friend SineSeries operator+(SineSeries a, const SineSeries& b) { return a += b; }
  friend SineSeries operator-(SineSeries a, const SineSeries& b) { return a -= b; }
  friend SineSeries operator*(SineSeries a, double s) { return a *= s; }

  /// Dense evaluation at any x (not restricted to grid nodes).
  double evaluate(double x) const;
  double evaluate_derivative(double x) const;

 private:
  std::map<int, double> coeffs_;
};

/// Nodal values on the uniform grid x_j = j h, j = 0..N, h = 1/N.
struct GridFunction {
  int n_intervals = 0;
  std::vector<double> values;

  double h() const { return 1.0 / n_intervals; }
};

/// Evaluates the series at the grid nodes.  Endpoint values are exactly
/// zero and modes alias exactly: mode 2mN +- j lands on mode j bitwise.
GridFunction sample(const SineSeries& series, int n_intervals);

/// Discrete sine transform of the interior nodal values,
/// c_n = 2h sum_j sin(n pi j / N) g_j for n = 1..N-1.  O(N log N).
SineSeries dst_forward(const GridFunction& g);

/// Direct O(N^2) evaluation of the same sums; reference path used as the
/// transform oracle in tests.
SineSeries dst_forward_direct(const GridFunction& g);

/// Exact aliased coefficients of a finite series on the N-grid: mode n folds
/// onto n mod 2N (or its reflection with flipped sign); modes hitting 0 or N
/// vanish.  Agrees with dst_forward(sample(.)) as identities.
SineSeries alias_coefficients(const SineSeries& series, int n_intervals);

/// Splits into (modes <= N-1, modes >= N).
std::pair<SineSeries, SineSeries> split_low_high(const SineSeries& series,
                                                 int n_intervals);

/// Parseval (semi-)norm: sqrt( 1/2 sum_n ((n pi)^p c_n)^2 ).
/// order 0 is the L2 norm, order 1 the H1 semi-norm.
double seminorm(const SineSeries& series, int order);

}  // namespace helmfd

#endif  // HELMFD_SPECTRAL_HPP
