#pragma once

#include <span>
#include <vector>

#include "xspc/frame_params.hpp"
#include "xspc/linalg.hpp"
#include "xspc/mel.hpp"

namespace xspc::dsp {

// Periodic Hann: 0.5 - 0.5*cos(2*pi*i/n)
std::vector<double> hann_window(int n);

enum class SpecKind { LinearMagnitude, LinearEnergy, MelEnergy };

struct Spectrogram {
    Mat data; // frames x bins, all entries >= 0
    SpecKind kind = SpecKind::LinearMagnitude;

    long frames() const { return data.rows(); }
    long bins() const { return data.cols(); }
};

// Hann-windowed magnitude spectrogram. Frames = 1 + floor((len - window)/hop),
// each frame zero-padded to n_fft; bin b holds |X_b| for the b-th non-negative
// frequency. Throws InputError on fewer than `window` samples.
Spectrogram stft_magnitude(std::span<const double> samples, const FrameParams& params);

// Squares every entry (magnitude -> energy).
Spectrogram magnitude_to_energy(const Spectrogram& spec);

// Per-frame matrix product with the filterbank. Input must be linear-energy
// with bins == fb rows; throws ShapeError otherwise (message carries both
// shapes).
Spectrogram linear_to_mel(const Spectrogram& spec, const MelFilterbank& fb);

} // namespace xspc::dsp
