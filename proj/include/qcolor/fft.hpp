#pragma once

#include <complex>
#include <span>

namespace qcolor::fft {

enum class Direction {
  kForward,   // exp(-2 pi i k n / N)
  kBackward,  // exp(+2 pi i k n / N), unnormalized
};

/// In-place complex DFT of arbitrary length (FFTW backend). Thread-safe;
/// plans are created once per (length, direction) and shared.
void transform(std::span<std::complex<double>> data, Direction dir);

}  // namespace qcolor::fft
