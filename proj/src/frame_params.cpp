#include "xspc/frame_params.hpp"

#include <cmath>
#include <string>

#include "xspc/errors.hpp"

namespace xspc::dsp {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

} // namespace

long FrameParams::num_frames(std::size_t n_samples) const {
    if (n_samples < static_cast<std::size_t>(window)) {
        throw xspc::InputError("input too short: " + std::to_string(n_samples) +
                               " samples, need at least " + std::to_string(window));
    }
    return 1 + static_cast<long>((n_samples - static_cast<std::size_t>(window)) /
                                 static_cast<std::size_t>(hop));
}

void FrameParams::validate() const {
    if (sample_rate <= 0)
        throw xspc::ConfigError("sample_rate must be positive, got " + std::to_string(sample_rate));
    if (hop <= 0 || hop > window)
        throw xspc::ConfigError("need 0 < hop <= window, got hop=" + std::to_string(hop) +
                                " window=" + std::to_string(window));
    if (window > n_fft)
        throw xspc::ConfigError("need window <= n_fft, got window=" + std::to_string(window) +
                                " n_fft=" + std::to_string(n_fft));
    if (!is_power_of_two(n_fft))
        throw xspc::ConfigError("n_fft must be a power of two, got " + std::to_string(n_fft));
    if (n_mels < 1)
        throw xspc::ConfigError("n_mels must be >= 1, got " + std::to_string(n_mels));
    if (fmin < 0.0 || fmin >= fmax || fmax > sample_rate / 2.0)
        throw xspc::ConfigError("need 0 <= fmin < fmax <= sample_rate/2, got fmin=" +
                                std::to_string(fmin) + " fmax=" + std::to_string(fmax));
}

FrameParams FrameParams::for_rate(int sample_rate) {
    FrameParams p;
    p.sample_rate = sample_rate;
    p.hop = static_cast<int>(std::lround(0.0125 * sample_rate));
    p.window = static_cast<int>(std::lround(0.05 * sample_rate));
    int n = 1;
    while (n < p.window) n <<= 1;
    p.n_fft = n;
    p.fmax = sample_rate / 2.0;
    p.validate();
    return p;
}

} // namespace xspc::dsp
