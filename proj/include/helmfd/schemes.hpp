#ifndef HELMFD_SCHEMES_HPP
#define HELMFD_SCHEMES_HPP

#include <optional>
#include <string_view>

#include "helmfd/exact.hpp"
#include "helmfd/spectral.hpp"

namespace helmfd {

/// The four 3-point schemes.  Classical is the plain centred stencil.
/// KMod shifts the wavenumber (k~ = (2/h) sin(kh/2)), LMod scales the
/// discrete Laplacian by k^2/k~^2, LFMod additionally multiplies the source
/// by (kh/2) cot(kh/2).  The corrected schemes require kh/2 < 1.
enum class SchemeKind { Classical, KMod, LMod, LFMod };

inline constexpr SchemeKind kAllSchemes[] = {SchemeKind::Classical, SchemeKind::KMod,
                                             SchemeKind::LMod, SchemeKind::LFMod};

const char* scheme_name(SchemeKind s);
std::optional<SchemeKind> scheme_from_name(std::string_view name);

/// k^h = (2/h) arcsin(kh/2); requires kh/2 < 1.
double discrete_wavenumber(double k, double h);

/// k^h - k evaluated without cancellation (the shift is ~ k^3 h^2 / 24).
double discrete_wavenumber_shift(double k, double h);

/// Symbol of the scheme applied to sin(xi x): the value lambda^h_s such
/// that the discrete solution coefficient is f_hat^h(xi) / lambda^h_s(xi).
/// For LFMod this already folds in the source multiplier.
double discrete_symbol(SchemeKind s, double xi, double k, double h);

/// lambda(xi) - lambda^h_s(xi) with the O(theta^4) cancellations between
/// xi^2 and (4/h^2) sin^2(xi h/2) removed analytically.
double symbol_gap(SchemeKind s, double xi, double k, double h);

/// Factor applied to sampled source values before solving (1 except LFMod).
double source_multiplier(SchemeKind s, double k, double h);

/// Nodal solution plus its sine interpolant (interpolant only filled for
/// homogeneous boundary data).
struct DiscreteSolution {
  int n_intervals = 0;
  GridFunction nodal;
  SineSeries interpolant;
};

/// Direct elimination on the (N-1)x(N-1) tridiagonal system.
DiscreteSolution solve_tridiagonal(SchemeKind s, const HelmholtzProblem& p, int n_intervals);

/// Mode-by-mode solve u_hat^h = f_hat^h / lambda^h_s; homogeneous case only.
DiscreteSolution solve_spectral(SchemeKind s, const HelmholtzProblem& p, int n_intervals);

/// sigma_k^h = min over grid frequencies of |k - (2/h) sin(xi h / 2)|.
double wellposedness_margin(double k, double h);

/// Smallest |lambda^h_s| over grid frequencies; well-posedness indicator.
double min_abs_discrete_symbol(SchemeKind s, double k, int n_intervals);

/// h_k = 2 sqrt(3 sigma_k) / (sigma_k/2 + n_k+ pi)^(3/2): every h below it
/// keeps sigma_k^h >= sigma_k / 2.
double h_k_bound(double k);

/// Scans N = 2..n_max and returns the largest 1/N* such that the margin
/// condition sigma_k^h >= sigma_k/2 holds for every N >= N*.
double h_k_star_search(double k, int n_max);

}  // namespace helmfd

#endif  // HELMFD_SCHEMES_HPP
