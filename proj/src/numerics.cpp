#include "helmfd/numerics.hpp"

#include <cmath>

namespace helmfd::num {

double grid_sine(std::int64_t idx, std::int64_t n) {
  std::int64_t m = idx % (2 * n);
  if (m < 0) m += 2 * n;
  double sign = 1.0;
  if (m >= n) {
    sign = -1.0;
    m -= n;
  }
  if (2 * m > n) m = n - m;  // fold into [0, n/2]
  if (m == 0) return 0.0;
  return sign * std::sin(M_PI * static_cast<double>(m) / static_cast<double>(n));
}

double asin_minus_x(double x) {
  if (std::abs(x) >= 1e-2) return std::asin(x) - x;
  // arcsin(x) = sum c_j x^(2j+1), c_0 = 1, c_{j+1}/c_j = (2j+1)^2 / (2(j+1)(2j+3))
  const double x2 = x * x;
  double coeff = 1.0;
  double power = x;
  double acc = 0.0;
  for (int j = 0; j < 6; ++j) {  // terms x^3 .. x^13
    coeff *= static_cast<double>((2 * j + 1) * (2 * j + 1)) /
             static_cast<double>(2 * (j + 1) * (2 * j + 3));
    power *= x2;
    acc += coeff * power;
  }
  return acc;
}

double x_minus_sin(double x) {
  if (std::abs(x) > 1.0) return x - std::sin(x);
  // x - sin x = x^3/3! - x^5/5! + ...
  const double x2 = x * x;
  double term = x * x2 / 6.0;
  double acc = term;
  for (int j = 2; j < 16; ++j) {
    term *= -x2 / static_cast<double>((2 * j) * (2 * j + 1));
    acc += term;
    if (std::abs(term) < 1e-20 * std::abs(acc)) break;
  }
  return acc;
}

double x2_minus_sin2(double x) { return x_minus_sin(x) * (x + std::sin(x)); }

double cos_minus_sinc(double x) {
  if (x == 0.0) return 0.0;
  if (std::abs(x) > 1.0) return std::cos(x) - std::sin(x) / x;
  // cos x - sinc x = sum_{j>=1} (-1)^j x^(2j) * 2j / (2j+1)!
  const double x2 = x * x;
  double fact = 6.0;  // (2j+1)! at j=1
  double power = x2;
  double acc = -power * 2.0 / fact;
  double sign = 1.0;
  for (int j = 2; j < 16; ++j) {
    fact *= static_cast<double>(2 * j) * static_cast<double>(2 * j + 1);
    power *= x2;
    double term = sign * power * static_cast<double>(2 * j) / fact;
    acc += term;
    sign = -sign;
    if (std::abs(term) < 1e-20 * std::abs(acc)) break;
  }
  return acc;
}

double tan_minus_x(double x) {
  if (std::abs(x) >= 0.15) return std::tan(x) - x;
  // tan x - x = x^3/3 + 2x^5/15 + 17x^7/315 + 62x^9/2835 + 1382x^11/155925
  //             + 21844x^13/6081075 + ...
  const double x2 = x * x;
  const double c[6] = {1.0 / 3.0,      2.0 / 15.0,      17.0 / 315.0,
                       62.0 / 2835.0,  1382.0 / 155925.0, 21844.0 / 6081075.0};
  double power = x * x2;
  double acc = 0.0;
  for (double cj : c) {
    acc += cj * power;
    power *= x2;
  }
  return acc;
}

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0);
  }
  return std::sin(x) / x;
}

double sin_small(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return x * (1.0 - x2 / 6.0 * (1.0 - x2 / 20.0));
  }
  return std::sin(x);
}

double cos_small(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 2.0 * (1.0 - x2 / 12.0);
  }
  return std::cos(x);
}

}  // namespace helmfd::num
