#pragma once

#include <complex>
#include <vector>

namespace silink {

// Discrete Fourier transforms for arbitrary lengths (radix-2 when the
// length is a power of two, Bluestein otherwise).  Sign and scaling follow
// the usual engineering convention: forward uses exp(-2*pi*i*k*n/N) and is
// unscaled, inverse uses exp(+2*pi*i*k*n/N) and divides by N.
std::vector<std::complex<double>> fft(std::vector<std::complex<double>> x);
std::vector<std::complex<double>> ifft(std::vector<std::complex<double>> x);

} // namespace silink
