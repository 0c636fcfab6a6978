#include "xspc/nn/params.hpp"

#include <cmath>

namespace xspc::nn {

namespace {

void fill_uniform(Mat& m, double bound, Rng& rng) {
    for (long r = 0; r < m.rows(); ++r)
        for (long c = 0; c < m.cols(); ++c) m(r, c) = rng.uniform(-bound, bound);
}

} // namespace

long param_count(const std::vector<BlockRef>& blocks) {
    long n = 0;
    for (const auto& b : blocks) n += b.size;
    return n;
}

LstmParams LstmParams::zeros(int hidden, int input) {
    LstmParams p;
    const int cols = hidden + input;
    p.w_f = Mat::Zero(hidden, cols);
    p.w_i = Mat::Zero(hidden, cols);
    p.w_o = Mat::Zero(hidden, cols);
    p.w_g = Mat::Zero(hidden, cols);
    p.b_f = Vec::Zero(hidden);
    p.b_i = Vec::Zero(hidden);
    p.b_o = Vec::Zero(hidden);
    p.b_g = Vec::Zero(hidden);
    return p;
}

LstmParams LstmParams::init(int hidden, int input, Rng& rng) {
    LstmParams p = zeros(hidden, input);
    const double bound = 1.0 / std::sqrt(static_cast<double>(hidden + input));
    fill_uniform(p.w_f, bound, rng);
    fill_uniform(p.w_i, bound, rng);
    fill_uniform(p.w_o, bound, rng);
    fill_uniform(p.w_g, bound, rng);
    p.b_f.setConstant(1.0);
    return p;
}

std::vector<BlockRef> LstmParams::blocks(const std::string& prefix) {
    return {block_ref(prefix + "w_xf", w_f), block_ref(prefix + "b_xf", b_f),
            block_ref(prefix + "w_xi", w_i), block_ref(prefix + "b_xi", b_i),
            block_ref(prefix + "w_xo", w_o), block_ref(prefix + "b_xo", b_o),
            block_ref(prefix + "w_xg", w_g), block_ref(prefix + "b_xg", b_g)};
}

long LstmParams::param_count() const {
    return 4 * (w_f.size() + b_f.size());
}

GateControlParams GateControlParams::zeros(int hidden, int control) {
    GateControlParams p;
    p.w_cf = Mat::Zero(hidden, control);
    p.w_ci = Mat::Zero(hidden, control);
    p.w_co = Mat::Zero(hidden, control);
    p.b_cf = Vec::Zero(hidden);
    p.b_ci = Vec::Zero(hidden);
    p.b_co = Vec::Zero(hidden);
    return p;
}

GateControlParams GateControlParams::lstm_equivalent(int hidden, int control) {
    GateControlParams p = zeros(hidden, control);
    p.b_cf.setConstant(1.0);
    p.b_ci.setConstant(1.0);
    p.b_co.setConstant(1.0);
    return p;
}

std::vector<BlockRef> GateControlParams::blocks(const std::string& prefix) {
    return {block_ref(prefix + "w_cf", w_cf), block_ref(prefix + "b_cf", b_cf),
            block_ref(prefix + "w_ci", w_ci), block_ref(prefix + "b_ci", b_ci),
            block_ref(prefix + "w_co", w_co), block_ref(prefix + "b_co", b_co)};
}

long GateControlParams::param_count() const {
    return 3 * (w_cf.size() + b_cf.size());
}

CglstmParams CglstmParams::zeros(int hidden, int input, int control) {
    return {LstmParams::zeros(hidden, input), GateControlParams::zeros(hidden, control)};
}

CglstmParams CglstmParams::init(int hidden, int input, int control, Rng& rng) {
    return {LstmParams::init(hidden, input, rng),
            GateControlParams::lstm_equivalent(hidden, control)};
}

std::vector<BlockRef> CglstmParams::blocks(const std::string& prefix) {
    auto out = content.blocks(prefix);
    auto ctl = control.blocks(prefix);
    out.insert(out.end(), ctl.begin(), ctl.end());
    return out;
}

long CglstmParams::param_count() const {
    return content.param_count() + control.param_count();
}

AffineParams AffineParams::zeros(int feature, int control) {
    AffineParams p;
    p.w1 = Mat::Zero(feature, control);
    p.w2 = Mat::Zero(feature, control);
    p.b1 = Vec::Zero(feature);
    p.b2 = Vec::Zero(feature);
    return p;
}

AffineParams AffineParams::identity(int feature, int control) {
    AffineParams p = zeros(feature, control);
    p.b1.setConstant(1.0);
    return p;
}

std::vector<BlockRef> AffineParams::blocks(const std::string& prefix) {
    return {block_ref(prefix + "w1", w1), block_ref(prefix + "b1", b1),
            block_ref(prefix + "w2", w2), block_ref(prefix + "b2", b2)};
}

long AffineParams::param_count() const {
    return 2 * (w1.size() + b1.size());
}

} // namespace xspc::nn
