#ifndef HELMFD_SRC_FFT_HPP
#define HELMFD_SRC_FFT_HPP

#include <complex>
#include <vector>

namespace helmfd::detail {

// In-place radix-2 transform; size must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse);

// Forward DFT of arbitrary length (Bluestein for non powers of two).
std::vector<std::complex<double>> dft(std::vector<std::complex<double>> a);

}  // namespace helmfd::detail

#endif  // HELMFD_SRC_FFT_HPP
