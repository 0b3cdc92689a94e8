#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "helmfd/numerics.hpp"

using namespace helmfd::num;

TEST_CASE("grid_sine folds exactly") {
  CHECK(grid_sine(0, 8) == 0.0);
  CHECK(grid_sine(8, 8) == 0.0);
  CHECK(grid_sine(16, 8) == 0.0);
  CHECK(grid_sine(4, 8) == 1.0);
  // aliasing identities are bitwise on the grid
  for (int j = 0; j <= 8; ++j) {
    CHECK(grid_sine(9 * j, 8) == -grid_sine(7 * j, 8));
    CHECK(grid_sine(15 * j, 8) == -grid_sine(1 * j, 8));
    CHECK(grid_sine((16 + 3) * j, 8) == grid_sine(3 * j, 8));
  }
  CHECK(grid_sine(1, 4) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
}

TEST_CASE("small-argument paths agree with direct evaluation") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(1e-6, 0.999);
  for (int i = 0; i < 2000; ++i) {
    const double x = u(rng);
    CHECK(asin_minus_x(x) ==
          doctest::Approx(std::asin(static_cast<long double>(x)) - x)
              .epsilon(1e-13));
    CHECK(x_minus_sin(x) ==
          doctest::Approx(static_cast<double>(
                              static_cast<long double>(x) - sinl(x)))
              .epsilon(1e-13));
    CHECK(cos_minus_sinc(x) ==
          doctest::Approx(static_cast<double>(cosl(x) - sinl(x) / x))
              .epsilon(1e-12));
    if (x < 0.9)
      CHECK(tan_minus_x(x) ==
            doctest::Approx(static_cast<double>(tanl(x) - x)).epsilon(1e-12));
  }
}

TEST_CASE("relative accuracy survives tiny arguments") {
  // leading terms: x^3/6, -x^2/3, x^3/3
  const double x = 1e-7;
  CHECK(x_minus_sin(x) == doctest::Approx(x * x * x / 6.0).epsilon(1e-12));
  CHECK(cos_minus_sinc(x) == doctest::Approx(-x * x / 3.0).epsilon(1e-12));
  CHECK(tan_minus_x(x) == doctest::Approx(x * x * x / 3.0).epsilon(1e-12));
  CHECK(asin_minus_x(x) == doctest::Approx(x * x * x / 6.0).epsilon(1e-12));
  CHECK(x2_minus_sin2(x) == doctest::Approx(x * x * x * x / 3.0).epsilon(1e-10));
  CHECK(sinc(0.0) == 1.0);
  CHECK(sin_small(x) == doctest::Approx(std::sin(x)).epsilon(1e-15));
  CHECK(cos_small(x) == doctest::Approx(std::cos(x)).epsilon(1e-15));
}
