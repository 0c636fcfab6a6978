#pragma once

#include "xspc/frame_params.hpp"
#include "xspc/linalg.hpp"

namespace xspc::dsp {

// HTK mel map: 2595 * log10(1 + f/700). Strictly monotone, mel(0) = 0.
// Throws DomainError on negative input.
double hz_to_mel(double f);
double mel_to_hz(double m);

// Linear-to-mel projection weights. Column m is one triangular filter with
// peak 1 at its center bin.
struct MelFilterbank {
    Mat weights;        // n_bins x n_mels
    FrameParams params;
};

// Filter centers are spaced uniformly in mel between fmin and fmax, then
// snapped to the nearest FFT bin. Throws ConfigError (naming the filter)
// when adjacent centers collapse onto the same bin.
MelFilterbank build_mel_filterbank(const FrameParams& params);

} // namespace xspc::dsp
