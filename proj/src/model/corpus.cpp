#include "xspc/model/corpus.hpp"

#include <cmath>
#include <string>

#include "xspc/errors.hpp"
#include "xspc/mel.hpp"
#include "xspc/rng.hpp"

namespace xspc::model {

namespace {

// smooth positive curve: cosine interpolation through a few log-domain knots
Vec smooth_envelope(int n_mels, Rng& rng) {
    constexpr int kKnots = 6;
    double knots[kKnots];
    for (double& k : knots) k = rng.uniform(-0.9, 0.9);
    Vec env(n_mels);
    for (int j = 0; j < n_mels; ++j) {
        const double pos = static_cast<double>(j) / (n_mels - 1) * (kKnots - 1);
        const int k0 = std::min(static_cast<int>(pos), kKnots - 2);
        const double frac = pos - k0;
        const double w = 0.5 - 0.5 * std::cos(M_PI * frac);
        env(j) = std::exp(knots[k0] * (1.0 - w) + knots[k0 + 1] * w);
    }
    return env;
}

PhonemeSequence draw_phonemes(const CorpusConfig& cfg, Rng& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        PhonemeSequence seq;
        const int n_ph = rng.uniform_int(5, 12);
        long total = 0;
        for (int k = 0; k < n_ph; ++k) {
            seq.ids.push_back(rng.uniform_int(0, cfg.n_symbols - 1));
            const int d = rng.uniform_int(cfg.min_duration, cfg.max_duration);
            seq.durations.push_back(d);
            total += d;
        }
        if (total >= cfg.min_frames && total <= cfg.max_frames) return seq;
    }
    throw xspc::ConfigError("cannot draw a phoneme sequence inside the frame bounds " +
                            std::to_string(cfg.min_frames) + ".." +
                            std::to_string(cfg.max_frames));
}

} // namespace

SyntheticCorpus synth_corpus_generate(const CorpusConfig& cfg, std::uint64_t seed) {
    if (cfg.n_speakers < 2)
        throw xspc::ConfigError("need at least 2 speakers, got " +
                                std::to_string(cfg.n_speakers));
    if (cfg.n_utterances < cfg.n_speakers)
        throw xspc::ConfigError("need at least one utterance per speaker");
    if (cfg.n_vowel_symbols < 1 || cfg.n_vowel_symbols >= cfg.n_symbols)
        throw xspc::ConfigError("need 1 <= n_vowel_symbols < n_symbols");
    if (cfg.min_frames < 1 || cfg.max_frames < cfg.min_frames)
        throw xspc::ConfigError("bad frame bounds");
    if (cfg.noise_sigma < 0.0) throw xspc::ConfigError("noise_sigma must be >= 0");
    cfg.frame_params.validate();

    Rng rng(seed);
    const auto fb = dsp::build_mel_filterbank(cfg.frame_params);

    SyntheticCorpus corpus;
    corpus.config = cfg;
    corpus.speakers.reserve(static_cast<std::size_t>(cfg.n_speakers));
    for (int s = 0; s < cfg.n_speakers; ++s)
        corpus.speakers.push_back({smooth_envelope(cfg.frame_params.n_mels, rng),
                                   rng.uniform(100.0, 260.0)});

    corpus.utterances.reserve(static_cast<std::size_t>(cfg.n_utterances));
    for (int u = 0; u < cfg.n_utterances; ++u) {
        Utterance utt;
        utt.speaker = u % cfg.n_speakers; // even coverage
        const Speaker& spk = corpus.speakers[static_cast<std::size_t>(utt.speaker)];
        utt.phonemes = draw_phonemes(cfg, rng);
        const long total = utt.phonemes.total_frames();

        // piecewise-constant f0, zero on consonants
        Vec f0(total);
        long t = 0;
        for (std::size_t k = 0; k < utt.phonemes.ids.size(); ++k) {
            const bool voiced = utt.phonemes.ids[k] < cfg.n_vowel_symbols;
            const double ph_f0 = voiced ? spk.base_f0 * std::exp(rng.uniform(-0.15, 0.15)) : 0.0;
            for (int d = 0; d < utt.phonemes.durations[k]; ++d, ++t) f0(t) = ph_f0;
        }

        // slow arc over the utterance plus per-frame jitter
        const double e_base = rng.uniform(40.0, 120.0);
        Vec e(total);
        for (long f = 0; f < total; ++f) {
            const double arc = 0.55 + 0.45 * std::sin(M_PI * (f + 0.5) / total);
            e(f) = e_base * arc * std::exp(rng.uniform(-0.35, 0.35));
        }

        utt.pitch = audio::PitchContour{std::move(f0), cfg.frame_params};
        utt.energy = audio::EnergyContour{std::move(e), cfg.frame_params};
        utt.excitation = exc::generate_excitation(utt.pitch, utt.energy, fb);

        utt.target = utt.excitation.mel.array().rowwise() *
                     spk.envelope.transpose().array();
        if (cfg.noise_sigma > 0.0)
            for (long f = 0; f < utt.target.rows(); ++f)
                for (long j = 0; j < utt.target.cols(); ++j)
                    utt.target(f, j) += cfg.noise_sigma * rng.normal();

        corpus.utterances.push_back(std::move(utt));
    }
    return corpus;
}

} // namespace xspc::model
