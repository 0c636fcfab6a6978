#pragma once

#include <complex>
#include <vector>

namespace xspc::dsp {

// In-place iterative radix-2 Cooley-Tukey. Size must be a power of two.
void fft_radix2(std::vector<std::complex<double>>& a);

} // namespace xspc::dsp
