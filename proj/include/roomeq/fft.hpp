#ifndef ROOMEQ_FFT_HPP
#define ROOMEQ_FFT_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace roomeq::fft {

bool is_power_of_two(std::size_t n);

// In-place radix-2 DIT transform. n must be a power of two.
// inverse applies the conjugate transform and the 1/n scale.
void transform(std::vector<std::complex<double>>& data, bool inverse);

// Real-input forward DFT, full complex grid of length nfft.
// Input shorter than nfft is zero-padded; longer input is an error here
// (callers decide their own truncation policy).
std::vector<std::complex<double>> real_forward(const std::vector<double>& samples,
                                               std::size_t nfft);

}  // namespace roomeq::fft

#endif  // ROOMEQ_FFT_HPP
