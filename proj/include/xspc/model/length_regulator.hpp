#pragma once

#include <vector>

#include "xspc/linalg.hpp"

namespace xspc::model {

struct PhonemeSequence {
    std::vector<int> ids;
    std::vector<int> durations; // frames per symbol, >= 1

    long total_frames() const;
};

// Repeats row k of symbol_features durations[k] times and appends the
// frame-position feature (t_local + 0.5) / duration as an extra column.
// symbol_features must have one row per symbol occurrence.
Mat length_regulate(const PhonemeSequence& seq, const Mat& symbol_features);

// Maps frame gradients back onto the per-occurrence symbol features. The
// position column carries no parameters and is dropped.
Mat length_regulate_backward(const PhonemeSequence& seq, const Mat& dframes);

} // namespace xspc::model
