#include "xspc/spectrogram.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "xspc/errors.hpp"
#include "xspc/fft.hpp"

namespace xspc::dsp {

std::vector<double> hann_window(int n) {
    std::vector<double> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        w[static_cast<std::size_t>(i)] = 0.5 - 0.5 * std::cos(2.0 * M_PI * i / n);
    return w;
}

Spectrogram stft_magnitude(std::span<const double> samples, const FrameParams& params) {
    params.validate();
    const long n_frames = params.num_frames(samples.size());
    const int n_bins = params.n_bins();
    const auto window = hann_window(params.window);

    Mat out(n_frames, n_bins);
    std::vector<std::complex<double>> buf(static_cast<std::size_t>(params.n_fft));
    for (long f = 0; f < n_frames; ++f) {
        const std::size_t start = static_cast<std::size_t>(f) * params.hop;
        for (int i = 0; i < params.window; ++i)
            buf[static_cast<std::size_t>(i)] = samples[start + static_cast<std::size_t>(i)] *
                                               window[static_cast<std::size_t>(i)];
        std::fill(buf.begin() + params.window, buf.end(), std::complex<double>(0.0, 0.0));
        fft_radix2(buf);
        for (int b = 0; b < n_bins; ++b)
            out(f, b) = std::abs(buf[static_cast<std::size_t>(b)]);
    }
    return Spectrogram{std::move(out), SpecKind::LinearMagnitude};
}

Spectrogram magnitude_to_energy(const Spectrogram& spec) {
    if (spec.kind != SpecKind::LinearMagnitude)
        throw xspc::ConfigError("magnitude_to_energy expects a linear-magnitude spectrogram");
    return Spectrogram{spec.data.array().square().matrix(), SpecKind::LinearEnergy};
}

Spectrogram linear_to_mel(const Spectrogram& spec, const MelFilterbank& fb) {
    if (spec.kind != SpecKind::LinearEnergy)
        throw xspc::ConfigError("linear_to_mel expects a linear-energy spectrogram");
    if (spec.bins() != fb.weights.rows())
        throw xspc::ShapeError("linear_to_mel: spectrogram is " + std::to_string(spec.frames()) +
                               "x" + std::to_string(spec.bins()) + " but filterbank is " +
                               std::to_string(fb.weights.rows()) + "x" +
                               std::to_string(fb.weights.cols()));
    return Spectrogram{spec.data * fb.weights, SpecKind::MelEnergy};
}

} // namespace xspc::dsp
