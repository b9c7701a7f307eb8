#ifndef ROOMEQ_KERNELS_HPP
#define ROOMEQ_KERNELS_HPP

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <vector>

// Data-parallel inner loops, each in two variants: a plain serial reference
// and an OpenMP version. The parallel variants are written so that every
// floating-point accumulation happens in the same order as the serial one
// (parallel phases only fill independent slots); outputs are bit-identical
// for any thread count, which the tests assert.
namespace roomeq::kernels {

inline constexpr int kPulseTaps = 16;

// One fractional-delay arrival: delay in samples, linear amplitude.
struct SincPulse {
  double delay;
  double amplitude;
};

// Hann-windowed sinc interpolation kernel for one pulse, normalized to unit
// L2 energy before the amplitude scale. start may be negative; out-of-range
// taps are dropped at scatter time.
struct PulseTaps {
  long start;
  std::array<double, kPulseTaps> taps;
};

PulseTaps pulse_taps(const SincPulse& pulse);

std::vector<double> render_pulses_serial(const std::vector<SincPulse>& pulses,
                                         std::size_t length);
std::vector<double> render_pulses(const std::vector<SincPulse>& pulses, std::size_t length);

// X * X^T for a row-major sample matrix (rows are observations).
Eigen::MatrixXd gram_serial(const Eigen::MatrixXd& x);
Eigen::MatrixXd gram(const Eigen::MatrixXd& x);

// Linear power |H[k]|^2 on the nfft/2+1 half grid for each input; inputs
// longer than nfft are truncated, shorter ones zero-padded.
std::vector<std::vector<double>> batch_power_spectra_serial(
    const std::vector<std::vector<double>>& irs, std::size_t nfft);
std::vector<std::vector<double>> batch_power_spectra(
    const std::vector<std::vector<double>>& irs, std::size_t nfft);

}  // namespace roomeq::kernels

#endif  // ROOMEQ_KERNELS_HPP
