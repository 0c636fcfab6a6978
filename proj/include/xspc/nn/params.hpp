#pragma once

#include <string>
#include <vector>

#include "xspc/linalg.hpp"
#include "xspc/rng.hpp"

namespace xspc::nn {

// Flat view over one named parameter block. Eigen's dense storage is
// contiguous, so a (name, pointer, size) triple is enough for the optimizer,
// the gradient checker, and checkpointing.
struct BlockRef {
    std::string name;
    double* data;
    long size;
    long rows; // for checkpoint shape metadata; vectors have cols == 1
    long cols;
};

inline BlockRef block_ref(const std::string& name, Mat& m) {
    return {name, m.data(), static_cast<long>(m.size()), m.rows(), m.cols()};
}
inline BlockRef block_ref(const std::string& name, Vec& v) {
    return {name, v.data(), static_cast<long>(v.size()), v.size(), 1};
}

long param_count(const std::vector<BlockRef>& blocks);

// Content-side gate and candidate weights. Matrices act on [h_prev, x].
struct LstmParams {
    Mat w_f, w_i, w_o, w_g; // hidden x (hidden + input)
    Vec b_f, b_i, b_o, b_g;

    int hidden() const { return static_cast<int>(w_f.rows()); }
    int input() const { return static_cast<int>(w_f.cols() - w_f.rows()); }

    static LstmParams zeros(int hidden, int input);
    // uniform +-1/sqrt(fan_in); forget bias starts at +1
    static LstmParams init(int hidden, int input, Rng& rng);

    std::vector<BlockRef> blocks(const std::string& prefix = "");
    long param_count() const;
};

// Control-side gate re-weighting: one projection of the control vector per
// gate. The candidate path deliberately has none.
struct GateControlParams {
    Mat w_cf, w_ci, w_co; // hidden x control
    Vec b_cf, b_ci, b_co;

    int hidden() const { return static_cast<int>(w_cf.rows()); }
    int control() const { return static_cast<int>(w_cf.cols()); }

    static GateControlParams zeros(int hidden, int control);
    // W = 0, b = 1: the cell starts exactly at the plain-LSTM point
    static GateControlParams lstm_equivalent(int hidden, int control);

    std::vector<BlockRef> blocks(const std::string& prefix = "");
    long param_count() const;
};

struct CglstmParams {
    LstmParams content;
    GateControlParams control;

    static CglstmParams zeros(int hidden, int input, int control);
    static CglstmParams init(int hidden, int input, int control, Rng& rng);

    std::vector<BlockRef> blocks(const std::string& prefix = "");
    long param_count() const;
};

// Scale-and-shift conditioning: x .* (w1*c + b1) + (w2*c + b2).
struct AffineParams {
    Mat w1, w2; // feature x control
    Vec b1, b2;

    int feature() const { return static_cast<int>(w1.rows()); }
    int control() const { return static_cast<int>(w1.cols()); }

    static AffineParams zeros(int feature, int control);
    // w = 0, b1 = 1, b2 = 0: conditioning starts as the identity
    static AffineParams identity(int feature, int control);

    std::vector<BlockRef> blocks(const std::string& prefix = "");
    long param_count() const;
};

} // namespace xspc::nn
