#include "roomeq/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "roomeq/errors.hpp"
#include "roomeq/fft.hpp"
#include "roomeq/log.hpp"

namespace roomeq::spectra {

LogPowerSpectrum log_power_spectrum(const ImpulseResponse& ir, std::size_t nfft) {
  if (ir.samples.empty()) {
    throw InvalidInput("log_power_spectrum: empty impulse response");
  }
  if (!fft::is_power_of_two(nfft)) {
    throw InvalidInput("log_power_spectrum: nfft must be a power of two, got " +
                       std::to_string(nfft));
  }

  std::vector<std::complex<double>> buf(nfft, {0.0, 0.0});
  const std::size_t n = std::min(ir.samples.size(), nfft);
  if (ir.samples.size() > nfft) {
    warn("log_power_spectrum: input length " + std::to_string(ir.samples.size()) +
         " exceeds nfft " + std::to_string(nfft) + ", truncating");
  }
  for (std::size_t i = 0; i < n; ++i) buf[i] = {ir.samples[i], 0.0};
  fft::transform(buf, false);

  LogPowerSpectrum out;
  out.sample_rate = ir.sample_rate;
  out.nfft = nfft;
  out.bins.resize(nfft / 2 + 1);
  for (std::size_t k = 0; k < out.bins.size(); ++k) {
    out.bins[k] = 10.0 * std::log10(std::norm(buf[k]) + kPowerFloor);
  }
  return out;
}

ImpulseResponse min_phase_fir(const LogPowerSpectrum& magnitude_db, std::size_t fir_length) {
  const std::size_t nfft = magnitude_db.nfft;
  if (!fft::is_power_of_two(nfft)) {
    throw InvalidInput("min_phase_fir: nfft must be a power of two");
  }
  if (magnitude_db.bins.size() != nfft / 2 + 1) {
    throw InvalidInput("min_phase_fir: bin count does not match nfft");
  }
  if (fir_length > nfft) {
    throw InvalidInput("min_phase_fir: fir_length " + std::to_string(fir_length) +
                       " exceeds nfft " + std::to_string(nfft));
  }

  // Natural log magnitude on the full grid by conjugate-symmetric extension.
  // dB is 10*log10(|H|^2), so ln|H| = dB * ln(10)/20.
  const double db_to_ln = std::numbers::ln10 / 20.0;
  std::vector<std::complex<double>> grid(nfft);
  for (std::size_t k = 0; k <= nfft / 2; ++k) {
    const double db = std::max(magnitude_db.bins[k], kFloorDb);
    grid[k] = {db * db_to_ln, 0.0};
  }
  for (std::size_t k = nfft / 2 + 1; k < nfft; ++k) grid[k] = grid[nfft - k];

  // Real cepstrum, then fold onto [0, nfft/2].
  fft::transform(grid, true);
  std::vector<double> folded(nfft / 2 + 1);
  folded[0] = grid[0].real();
  for (std::size_t n = 1; n < nfft / 2; ++n) folded[n] = 2.0 * grid[n].real();
  folded[nfft / 2] = grid[nfft / 2].real();

  // Exponentiate on a 4x grid: the folded cepstrum has support [0, nfft/2],
  // so its transform is exact at any denser grid and the wrap-around of the
  // reconstructed response shrinks accordingly.
  const std::size_t dense = 4 * nfft;
  std::vector<std::complex<double>> spec(dense, {0.0, 0.0});
  for (std::size_t n = 0; n <= nfft / 2; ++n) spec[n] = {folded[n], 0.0};
  fft::transform(spec, false);
  for (auto& x : spec) x = std::exp(x);
  fft::transform(spec, true);

  ImpulseResponse out;
  out.sample_rate = magnitude_db.sample_rate;
  out.samples.resize(fir_length);
  for (std::size_t n = 0; n < fir_length; ++n) out.samples[n] = spec[n].real();
  return out;
}

}  // namespace roomeq::spectra
