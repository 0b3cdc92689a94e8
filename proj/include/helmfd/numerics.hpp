#ifndef HELMFD_NUMERICS_HPP
#define HELMFD_NUMERICS_HPP

#include <cstdint>

namespace helmfd::num {

/// sin(pi * idx / n) evaluated with exact integer folding of the argument
/// into [0, pi/2].  On a uniform grid this makes the aliasing identities
/// sin((2mN +- j) pi / N) = +- sin(j pi / N) hold bitwise, and the endpoint
/// values are exactly zero.
double grid_sine(std::int64_t idx, std::int64_t n);

/// arcsin(x) - x.  Maclaurin series for |x| < 1e-2 (terms through x^13),
/// direct otherwise.  Keeps full relative accuracy for the discrete
/// wavenumber shift, which is of size ~k^3 h^2 / 24.
double asin_minus_x(double x);

/// x - sin(x), alternating series for |x| <= 1, direct otherwise.
double x_minus_sin(double x);

/// x^2 - sin(x)^2 = (x - sin x)(x + sin x), stable for small x.
double x2_minus_sin2(double x);

/// cos(x) - sin(x)/x; the leading terms cancel to -x^2/3 + O(x^4).
double cos_minus_sinc(double x);

/// tan(x) - x, series for small |x|.
double tan_minus_x(double x);

/// sin(x)/x with the removable singularity filled in.
double sinc(double x);

/// sin with an explicit polynomial path below |x| < 1e-4.
double sin_small(double x);

/// cos with an explicit polynomial path below |x| < 1e-4.
double cos_small(double x);

}  // namespace helmfd::num

#endif  // HELMFD_NUMERICS_HPP
