#pragma once

#include <cstdint>
#include <vector>

#include "xspc/audio.hpp"
#include "xspc/excitation.hpp"
#include "xspc/frame_params.hpp"
#include "xspc/linalg.hpp"
#include "xspc/model/length_regulator.hpp"

namespace xspc::model {

struct Speaker {
    Vec envelope;   // n_mels, positive, smooth
    double base_f0; // Hz
};

struct Utterance {
    PhonemeSequence phonemes;
    int speaker = 0;
    audio::PitchContour pitch;
    audio::EnergyContour energy;
    exc::ExcitationSpectrogram excitation; // ground-truth mel excitation
    Mat target;                            // frames x n_mels; additive noise may push
                                           // individual entries slightly negative

    long frames() const { return target.rows(); }
};

struct CorpusConfig {
    int n_speakers = 8;
    int n_utterances = 40;
    int n_symbols = 12;
    int n_vowel_symbols = 8; // ids below this are voiced
    int min_frames = 40;
    int max_frames = 120;
    int min_duration = 3;  // frames per phoneme
    int max_duration = 15;
    double noise_sigma = 0.05;
    dsp::FrameParams frame_params{};
};

struct SyntheticCorpus {
    CorpusConfig config;
    std::vector<Speaker> speakers;
    std::vector<Utterance> utterances;
};

// Multi-speaker toy corpus: per speaker a smooth spectral envelope and a base
// pitch; per utterance random phonemes with durations, a piecewise-constant
// f0 contour (zero on consonant symbols), a jittered energy contour, and
// target = envelope .* excitation + noise_sigma * gaussian. Deterministic
// per seed. Throws ConfigError on degenerate sizes.
SyntheticCorpus synth_corpus_generate(const CorpusConfig& cfg, std::uint64_t seed);

} // namespace xspc::model
