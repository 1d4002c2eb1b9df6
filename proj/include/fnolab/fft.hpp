#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace fnolab::fft {

// Thin thread-safe wrapper over FFTW c2c plans. Plans are cached per
// (shape, howmany, sign); execution runs concurrently on caller buffers.
// Layout: interleaved channels, in[point * howmany + c]. Both directions are
// unnormalized (backward is the plain conjugate-exponent sum).

void forward(const std::vector<std::size_t>& shape, std::size_t howmany,
             const std::complex<double>* in, std::complex<double>* out);

void backward(const std::vector<std::size_t>& shape, std::size_t howmany,
              const std::complex<double>* in, std::complex<double>* out);

} // namespace fnolab::fft
