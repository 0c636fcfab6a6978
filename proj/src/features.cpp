#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "xspc/audio.hpp"
#include "xspc/errors.hpp"
#include "xspc/spectrogram.hpp"

namespace xspc::audio {

EnergyContour extract_energy(const AudioClip& clip, const dsp::FrameParams& params) {
    params.validate();
    const long n_frames = params.num_frames(clip.samples.size());
    const auto window = dsp::hann_window(params.window);

    Vec e(n_frames);
    for (long f = 0; f < n_frames; ++f) {
        const std::size_t start = static_cast<std::size_t>(f) * params.hop;
        double acc = 0.0;
        for (int i = 0; i < params.window; ++i) {
            const double v = window[static_cast<std::size_t>(i)] * clip.samples[start + i];
            acc += v * v;
        }
        e(f) = acc;
    }
    return EnergyContour{std::move(e), params};
}

PitchContour extract_pitch(const AudioClip& clip, const dsp::FrameParams& params,
                           double f0_min, double f0_max, double voicing_threshold) {
    params.validate();
    if (f0_min <= 0.0 || f0_min >= f0_max || f0_max > params.sample_rate / 2.0)
        throw xspc::ConfigError("extract_pitch: need 0 < f0_min < f0_max <= sample_rate/2, got " +
                                std::to_string(f0_min) + ".." + std::to_string(f0_max));

    const long n_frames = params.num_frames(clip.samples.size());
    const int lag_min = std::max(1, static_cast<int>(std::ceil(params.sample_rate / f0_max)));
    const int lag_max = static_cast<int>(std::floor(params.sample_rate / f0_min));
    if (lag_max + 1 >= params.window)
        throw xspc::ConfigError("extract_pitch: window too short for f0_min=" +
                                std::to_string(f0_min));

    Vec f0 = Vec::Zero(n_frames);
    const int w = params.window;
    std::vector<double> frame(static_cast<std::size_t>(w));
    std::vector<double> score(static_cast<std::size_t>(lag_max) + 2, 0.0);

    for (long fi = 0; fi < n_frames; ++fi) {
        const std::size_t start = static_cast<std::size_t>(fi) * params.hop;
        double mean = 0.0;
        for (int i = 0; i < w; ++i) mean += clip.samples[start + i];
        mean /= w;
        for (int i = 0; i < w; ++i) frame[static_cast<std::size_t>(i)] = clip.samples[start + i] - mean;

        // normalized autocorrelation r(lag) over the overlapping region
        int best_lag = 0;
        double best = 0.0;
        for (int lag = lag_min; lag <= lag_max; ++lag) {
            double num = 0.0, e0 = 0.0, e1 = 0.0;
            const int m = w - lag;
            for (int i = 0; i < m; ++i) {
                const double a = frame[static_cast<std::size_t>(i)];
                const double b = frame[static_cast<std::size_t>(i + lag)];
                num += a * b;
                e0 += a * a;
                e1 += b * b;
            }
            const double denom = std::sqrt(e0 * e1);
            const double r = (denom > 1e-12) ? num / denom : 0.0;
            score[static_cast<std::size_t>(lag)] = r;
            if (r > best) {
                best = r;
                best_lag = lag;
            }
        }
        if (best_lag == 0 || best < voicing_threshold) continue; // unvoiced

        // parabolic interpolation around the peak
        double lag = best_lag;
        if (best_lag > lag_min && best_lag < lag_max) {
            const double ym = score[static_cast<std::size_t>(best_lag - 1)];
            const double y0 = score[static_cast<std::size_t>(best_lag)];
            const double yp = score[static_cast<std::size_t>(best_lag + 1)];
            const double denom = ym - 2.0 * y0 + yp;
            if (std::fabs(denom) > 1e-12) {
                const double delta = 0.5 * (ym - yp) / denom;
                if (std::fabs(delta) <= 1.0) lag += delta;
            }
        }
        f0(fi) = std::clamp(params.sample_rate / lag, f0_min, f0_max);
    }
    return PitchContour{std::move(f0), params};
}

} // namespace xspc::audio
