#pragma once

#include <filesystem>
#include <vector>

#include "xspc/frame_params.hpp"
#include "xspc/linalg.hpp"

namespace xspc::audio {

struct AudioClip {
    std::vector<double> samples; // amplitudes in [-1, 1]
    int sample_rate = 16000;
};

// PCM 16-bit mono RIFF/WAVE only. Samples are scaled by 1/32768.
// Unsupported codec/channel layout raises IoError naming the field;
// truncation raises IoError with the byte offset.
AudioClip read_wav(const std::filesystem::path& path);
void write_wav(const std::filesystem::path& path, const AudioClip& clip);

// Scales so max |sample| hits the target peak (default 0.95). Throws
// InputError on empty or all-zero clips.
AudioClip normalize_energy(const AudioClip& clip, double target_peak = 0.95);

// Cuts leading/trailing audio whose short-term energy sits below
// threshold_db (relative to the clip's peak), keeping 60 ms adjacent to
// speech on each side; zero-pads when the original had less. Analysis
// granularity is 10 ms. Throws InputError if nothing exceeds the threshold.
AudioClip trim_silence(const AudioClip& clip, double threshold_db = -40.0);

struct PitchContour {
    Vec f0; // per frame, Hz; 0 = unvoiced
    dsp::FrameParams params;
};

struct EnergyContour {
    Vec e; // per frame, sum of squared windowed samples
    dsp::FrameParams params;
};

// e_i = sum of squared Hann-windowed samples of frame i; frame count matches
// stft_magnitude for the same params.
EnergyContour extract_energy(const AudioClip& clip, const dsp::FrameParams& params);

// Normalized autocorrelation per frame over lags [rate/f0_max, rate/f0_min].
// Peak below voicing_threshold means unvoiced (f0 = 0); otherwise
// f0 = rate/lag with parabolic interpolation around the peak, clamped to
// [f0_min, f0_max].
PitchContour extract_pitch(const AudioClip& clip, const dsp::FrameParams& params,
                           double f0_min = 50.0, double f0_max = 500.0,
                           double voicing_threshold = 0.3);

} // namespace xspc::audio
