#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace ngd::fft {

std::size_t next_pow2(std::size_t n);

/// In-place radix-2 FFT; data.size() must be a power of two.
/// Forward uses the e^{-i omega t} kernel; inverse applies the 1/N factor.
void transform(std::vector<std::complex<double>>& data, bool inverse);

} // namespace ngd::fft
