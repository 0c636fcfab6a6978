#include "xspc/model/length_regulator.hpp"

#include <string>

#include "xspc/errors.hpp"

namespace xspc::model {

long PhonemeSequence::total_frames() const {
    long total = 0;
    for (int d : durations) total += d;
    return total;
}

namespace {

void check_sequence(const PhonemeSequence& seq, long feature_rows) {
    if (seq.ids.size() != seq.durations.size())
        throw xspc::ShapeError("phoneme sequence has " + std::to_string(seq.ids.size()) +
                               " ids but " + std::to_string(seq.durations.size()) + " durations");
    if (feature_rows != static_cast<long>(seq.ids.size()))
        throw xspc::ShapeError("symbol feature rows (" + std::to_string(feature_rows) +
                               ") do not match phoneme count (" + std::to_string(seq.ids.size()) +
                               ")");
    for (int d : seq.durations)
        if (d < 1) throw xspc::ShapeError("durations must be >= 1, got " + std::to_string(d));
}

} // namespace

Mat length_regulate(const PhonemeSequence& seq, const Mat& symbol_features) {
    check_sequence(seq, symbol_features.rows());
    const long total = seq.total_frames();
    Mat out(total, symbol_features.cols() + 1);
    long t = 0;
    for (std::size_t k = 0; k < seq.ids.size(); ++k) {
        const int d = seq.durations[k];
        for (int local = 0; local < d; ++local, ++t) {
            out.row(t).head(symbol_features.cols()) = symbol_features.row(static_cast<long>(k));
            out(t, symbol_features.cols()) = (local + 0.5) / d;
        }
    }
    return out;
}

Mat length_regulate_backward(const PhonemeSequence& seq, const Mat& dframes) {
    check_sequence(seq, static_cast<long>(seq.ids.size()));
    if (dframes.rows() != seq.total_frames())
        throw xspc::ShapeError("frame gradient rows (" + std::to_string(dframes.rows()) +
                               ") do not match total frames (" +
                               std::to_string(seq.total_frames()) + ")");
    const long feat = dframes.cols() - 1;
    Mat dsym = Mat::Zero(static_cast<long>(seq.ids.size()), feat);
    long t = 0;
    for (std::size_t k = 0; k < seq.ids.size(); ++k)
        for (int local = 0; local < seq.durations[k]; ++local, ++t)
            dsym.row(static_cast<long>(k)) += dframes.row(t).head(feat);
    return dsym;
}

} // namespace xspc::model
