#ifndef ROOMEQ_SPECTRA_HPP
#define ROOMEQ_SPECTRA_HPP

#include <cstddef>
#include <vector>

namespace roomeq {

// Time-domain acoustic response at a fixed sample rate.
struct ImpulseResponse {
  std::vector<double> samples;
  int sample_rate = 0;
};

// Log-energy magnitude coefficients over the nfft/2+1 half grid, in dB
// (10*log10 of power). Bins are floor-clamped so they are always finite.
struct LogPowerSpectrum {
  std::vector<double> bins;
  int sample_rate = 0;
  std::size_t nfft = 0;

  std::size_t bin_count() const { return bins.size(); }
  double bin_hz(std::size_t k) const {
    return static_cast<double>(k) * sample_rate / static_cast<double>(nfft);
  }
};

namespace spectra {

// Power floor of 1e-12 (-120 dB) keeps bins finite at spectral nulls.
inline constexpr double kPowerFloor = 1e-12;
inline constexpr double kFloorDb = -120.0;

// bins[k] = 10*log10(|H[k]|^2 + 1e-12), H the real DFT over nfft points.
// Input longer than nfft is truncated with a warning; nfft must be a
// power of two.
LogPowerSpectrum log_power_spectrum(const ImpulseResponse& ir, std::size_t nfft);

// Causal FIR whose magnitude matches the target and whose phase is the
// minimum-phase response, via the folded real cepstrum. The exponentiation
// step runs on a 4x oversampled grid to reduce time aliasing of the
// reconstructed response.
ImpulseResponse min_phase_fir(const LogPowerSpectrum& magnitude_db, std::size_t fir_length);

}  // namespace spectra
}  // namespace roomeq

#endif  // ROOMEQ_SPECTRA_HPP
