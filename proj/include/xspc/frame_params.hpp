#pragma once

#include <cstddef>

namespace xspc::dsp {

// Single source of truth for frame math. Every stage that frames audio
// (spectrogram, pitch, energy, excitation) takes one of these, so frame
// counts agree by construction.
struct FrameParams {
    int sample_rate = 16000; // Hz
    int hop = 200;           // samples (12.5 ms at 16 kHz)
    int window = 800;        // samples (50 ms at 16 kHz)
    int n_fft = 1024;        // power of two >= window
    int n_mels = 80;
    double fmin = 0.0;       // Hz
    double fmax = 8000.0;    // Hz

    int n_bins() const { return n_fft / 2 + 1; }

    double bin_hz(int bin) const {
        return static_cast<double>(bin) * sample_rate / n_fft;
    }

    // 1 + floor((len - window) / hop); throws InputError if len < window
    long num_frames(std::size_t n_samples) const;

    // throws ConfigError on any violated invariant
    void validate() const;

    // 12.5 ms hop / 50 ms window scaled to the given rate, n_fft = next power
    // of two >= window
    static FrameParams for_rate(int sample_rate);

    bool operator==(const FrameParams&) const = default;
};

} // namespace xspc::dsp
