#include "xspc/audio.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xspc/errors.hpp"

namespace xspc::audio {

AudioClip normalize_energy(const AudioClip& clip, double target_peak) {
    if (clip.samples.empty()) throw xspc::InputError("normalize_energy: empty clip");
    double peak = 0.0;
    for (double s : clip.samples) peak = std::max(peak, std::fabs(s));
    if (peak == 0.0) throw xspc::InputError("normalize_energy: all-zero clip");
    const double scale = target_peak / peak;
    AudioClip out{clip.samples, clip.sample_rate};
    for (double& s : out.samples) s *= scale;
    return out;
}

AudioClip trim_silence(const AudioClip& clip, double threshold_db) {
    if (clip.samples.empty()) throw xspc::InputError("trim_silence: empty clip");
    const std::size_t n = clip.samples.size();
    const std::size_t hop = static_cast<std::size_t>(std::lround(0.01 * clip.sample_rate));
    const std::size_t keep = static_cast<std::size_t>(std::lround(0.06 * clip.sample_rate));

    double peak = 0.0;
    for (double s : clip.samples) peak = std::max(peak, std::fabs(s));
    if (peak == 0.0) throw xspc::InputError("trim_silence: all-zero clip");
    // mean-square threshold relative to the peak amplitude
    const double thresh = peak * peak * std::pow(10.0, threshold_db / 10.0);

    const std::size_t n_win = (n + hop - 1) / hop;
    long first = -1, last = -1;
    for (std::size_t w = 0; w < n_win; ++w) {
        const std::size_t begin = w * hop;
        const std::size_t end = std::min(begin + hop, n);
        double acc = 0.0;
        for (std::size_t i = begin; i < end; ++i) acc += clip.samples[i] * clip.samples[i];
        if (acc / static_cast<double>(end - begin) >= thresh) {
            if (first < 0) first = static_cast<long>(w);
            last = static_cast<long>(w);
        }
    }
    if (first < 0) throw xspc::InputError("trim_silence: clip is entirely below threshold");

    const std::size_t speech_begin = static_cast<std::size_t>(first) * hop;
    const std::size_t speech_end = std::min(static_cast<std::size_t>(last + 1) * hop, n);
    const std::size_t head_avail = std::min(keep, speech_begin);
    const std::size_t tail_avail = std::min(keep, n - speech_end);

    AudioClip out;
    out.sample_rate = clip.sample_rate;
    out.samples.reserve(2 * keep + (speech_end - speech_begin));
    out.samples.insert(out.samples.end(), keep - head_avail, 0.0);
    out.samples.insert(out.samples.end(), clip.samples.begin() + (speech_begin - head_avail),
                       clip.samples.begin() + speech_end + tail_avail);
    out.samples.insert(out.samples.end(), keep - tail_avail, 0.0);
    return out;
}

} // namespace xspc::audio
