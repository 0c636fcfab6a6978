#include "xspc/excitation.hpp"

#include <cmath>
#include <string>

#include "xspc/errors.hpp"

namespace xspc::exc {

std::vector<HarmonicBin> harmonic_bins(double f0, const dsp::FrameParams& params) {
    if (f0 <= 0.0)
        throw xspc::DomainError("harmonic_bins: f0 must be positive, got " + std::to_string(f0));
    const double nyquist = params.sample_rate / 2.0;
    const int n_h = static_cast<int>(std::floor(nyquist / f0));

    std::vector<HarmonicBin> bins;
    bins.reserve(static_cast<std::size_t>(std::max(n_h, 0)));
    for (int i = 1; i <= n_h; ++i) {
        const int b = static_cast<int>(std::lround(i * f0 * params.n_fft / params.sample_rate));
        if (!bins.empty() && bins.back().bin == b)
            ++bins.back().count;
        else
            bins.push_back({b, 1});
    }
    return bins;
}

Vec excitation_linear_frame(double f0, double e, const dsp::FrameParams& params,
                            bool paper_literal_divisor) {
    if (e < 0.0)
        throw xspc::DomainError("excitation_linear_frame: negative energy " + std::to_string(e));
    const int n_bins = params.n_bins();
    Vec frame = Vec::Zero(n_bins);
    if (f0 == 0.0) {
        const double divisor = paper_literal_divisor ? params.n_fft : n_bins;
        frame.setConstant(e / divisor);
        return frame;
    }
    const auto bins = harmonic_bins(f0, params);
    if (bins.empty())
        throw xspc::DomainError("excitation_linear_frame: f0 " + std::to_string(f0) +
                                " Hz has no harmonic below Nyquist");
    int n_h = 0;
    for (const auto& hb : bins) n_h += hb.count;
    for (const auto& hb : bins) frame(hb.bin) = hb.count * (e / n_h);
    return frame;
}

namespace {

void check_contours(const audio::PitchContour& pitch, const audio::EnergyContour& energy) {
    if (pitch.f0.size() != energy.e.size())
        throw xspc::ShapeError("contour frame counts differ: pitch " +
                               std::to_string(pitch.f0.size()) + " vs energy " +
                               std::to_string(energy.e.size()));
    if (!(pitch.params == energy.params))
        throw xspc::ShapeError("contour frame params differ between pitch and energy");
}

} // namespace

dsp::Spectrogram generate_excitation_linear(const audio::PitchContour& pitch,
                                            const audio::EnergyContour& energy,
                                            bool paper_literal_divisor) {
    check_contours(pitch, energy);
    const auto& p = pitch.params;
    Mat data(pitch.f0.size(), p.n_bins());
    for (long f = 0; f < pitch.f0.size(); ++f)
        data.row(f) =
            excitation_linear_frame(pitch.f0(f), energy.e(f), p, paper_literal_divisor).transpose();
    return dsp::Spectrogram{std::move(data), dsp::SpecKind::LinearEnergy};
}

ExcitationSpectrogram generate_excitation(const audio::PitchContour& pitch,
                                          const audio::EnergyContour& energy,
                                          const dsp::MelFilterbank& fb,
                                          bool paper_literal_divisor) {
    check_contours(pitch, energy);
    if (!(fb.params == pitch.params))
        throw xspc::ShapeError("filterbank frame params differ from contour params");
    const auto linear = generate_excitation_linear(pitch, energy, paper_literal_divisor);
    auto mel = dsp::linear_to_mel(linear, fb);
    return ExcitationSpectrogram{std::move(mel.data), pitch.params};
}

} // namespace xspc::exc
