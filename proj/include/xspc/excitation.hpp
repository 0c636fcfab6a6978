#pragma once

#include <vector>

#include "xspc/audio.hpp"
#include "xspc/frame_params.hpp"
#include "xspc/linalg.hpp"
#include "xspc/mel.hpp"
#include "xspc/spectrogram.hpp"

namespace xspc::exc {

struct HarmonicBin {
    int bin;   // FFT bin index
    int count; // harmonics that rounded onto this bin
};

// Harmonics at i*f0 for i = 1..floor(nyquist/f0), each mapped to
// round(i*f0*n_fft/sample_rate). Collisions are aggregated into counts.
// f0 above Nyquist yields an empty list. Throws DomainError for f0 <= 0;
// unvoiced frames must be routed to the uniform branch by the caller.
std::vector<HarmonicBin> harmonic_bins(double f0, const dsp::FrameParams& params);

// One linear-spectrum frame. Unvoiced (f0 == 0): every bin gets e/n_bins,
// which conserves the frame energy; the paper_literal_divisor switch uses
// e/n_fft instead. Voiced: each harmonic bin gets e/N_h (collisions
// accumulate), the rest stay zero. Throws DomainError on negative energy or
// a voiced f0 with no harmonic below Nyquist.
Vec excitation_linear_frame(double f0, double e, const dsp::FrameParams& params,
                            bool paper_literal_divisor = false);

struct ExcitationSpectrogram {
    Mat mel; // frames x n_mels
    dsp::FrameParams params;
};

// Per-frame linear excitation for a whole contour pair.
dsp::Spectrogram generate_excitation_linear(const audio::PitchContour& pitch,
                                            const audio::EnergyContour& energy,
                                            bool paper_literal_divisor = false);

// Linear excitation projected through the filterbank.
ExcitationSpectrogram generate_excitation(const audio::PitchContour& pitch,
                                          const audio::EnergyContour& energy,
                                          const dsp::MelFilterbank& fb,
                                          bool paper_literal_divisor = false);

} // namespace xspc::exc
