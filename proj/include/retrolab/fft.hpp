#pragma once

#include <complex>
#include <vector>

namespace rlab {

using cplx = std::complex<double>;

// In-place DFT, FFTW sign convention: forward multiplies by e^{-ikx}.
// Plans are cached per (size, direction) and creation is serialized, so these
// are safe to call from multiple threads.
void fft_forward(std::vector<cplx>& data);

// In-place inverse DFT including the 1/n normalization.
void fft_inverse(std::vector<cplx>& data);

}  // namespace rlab
