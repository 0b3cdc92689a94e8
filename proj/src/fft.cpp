#include "fft.hpp"

#include <cmath>
#include <cstdint>

namespace helmfd::detail {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t j = 0; j < len / 2; ++j) {
        std::complex<double> u = a[i + j];
        std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv;
  }
}

std::vector<std::complex<double>> dft(std::vector<std::complex<double>> a) {
  const std::size_t n = a.size();
  if (n <= 1) return a;
  if (is_pow2(n)) {
    fft_pow2(a, false);
    return a;
  }
  // Bluestein: X_k = conj(c_k) * sum_j (a_j conj(c_j)) c_{k-j},
  // c_m = exp(i pi m^2 / n).  The exponent m^2 is reduced mod 2n in exact
  // integer arithmetic before evaluating the complex exponential.
  const std::size_t m = next_pow2(2 * n - 1);
  auto chirp = [&](std::int64_t idx) {
    // idx^2 mod 2n without overflow: reduce idx mod 2n first.
    std::int64_t r = idx % static_cast<std::int64_t>(2 * n);
    if (r < 0) r += static_cast<std::int64_t>(2 * n);
    std::int64_t sq = (r * r) % static_cast<std::int64_t>(2 * n);
    double ang = M_PI * static_cast<double>(sq) / static_cast<double>(n);
    return std::complex<double>(std::cos(ang), std::sin(ang));
  };
  std::vector<std::complex<double>> u(m, 0.0), v(m, 0.0);
  for (std::size_t j = 0; j < n; ++j) u[j] = a[j] * std::conj(chirp(static_cast<std::int64_t>(j)));
  for (std::size_t j = 0; j < n; ++j) {
    const auto c = chirp(static_cast<std::int64_t>(j));
    v[j] = c;
    if (j != 0) v[m - j] = c;
  }
  fft_pow2(u, false);
  fft_pow2(v, false);
  for (std::size_t j = 0; j < m; ++j) u[j] *= v[j];
  fft_pow2(u, true);
  std::vector<std::complex<double>> out(n);
  for (std::size_t k = 0; k < n; ++k)
    out[k] = std::conj(chirp(static_cast<std::int64_t>(k))) * u[k];
  return out;
}

}  // namespace helmfd::detail
