#include "xspc/mel.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "xspc/errors.hpp"

namespace xspc::dsp {

double hz_to_mel(double f) {
    if (f < 0.0) throw xspc::DomainError("hz_to_mel: negative frequency " + std::to_string(f));
    return 2595.0 * std::log10(1.0 + f / 700.0);
}

double mel_to_hz(double m) {
    if (m < 0.0) throw xspc::DomainError("mel_to_hz: negative mel value " + std::to_string(m));
    return 700.0 * (std::pow(10.0, m / 2595.0) - 1.0);
}

MelFilterbank build_mel_filterbank(const FrameParams& params) {
    params.validate();
    const int n_bins = params.n_bins();
    const int n_mels = params.n_mels;

    // n_mels + 2 edge/center points, uniform in mel, snapped to FFT bins
    std::vector<int> bin(static_cast<std::size_t>(n_mels) + 2);
    const double mel_lo = hz_to_mel(params.fmin);
    const double mel_hi = hz_to_mel(params.fmax);
    for (int i = 0; i < n_mels + 2; ++i) {
        const double mel = mel_lo + (mel_hi - mel_lo) * i / (n_mels + 1);
        const double hz = mel_to_hz(mel);
        bin[static_cast<std::size_t>(i)] =
            static_cast<int>(std::lround(hz * params.n_fft / params.sample_rate));
    }

    for (int m = 0; m < n_mels; ++m) {
        if (bin[m + 1] <= bin[m] || bin[m + 2] <= bin[m + 1])
            throw xspc::ConfigError(
                "mel filter " + std::to_string(m) + " collapsed: edges map to bins " +
                std::to_string(bin[m]) + "/" + std::to_string(bin[m + 1]) + "/" +
                std::to_string(bin[m + 2]) + "; reduce n_mels or raise n_fft");
    }

    Mat w = Mat::Zero(n_bins, n_mels);
    for (int m = 0; m < n_mels; ++m) {
        const int left = bin[m];
        const int center = bin[m + 1];
        const int right = bin[m + 2];
        for (int k = left + 1; k < center; ++k)
            w(k, m) = static_cast<double>(k - left) / (center - left);
        for (int k = center; k < right; ++k)
            w(k, m) = static_cast<double>(right - k) / (right - center);
    }
    return MelFilterbank{std::move(w), params};
}

} // namespace xspc::dsp
