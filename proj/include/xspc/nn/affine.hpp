#pragma once

#include "xspc/linalg.hpp"
#include "xspc/nn/params.hpp"

namespace xspc::nn {

// w*x + b with shape checking.
Vec proj(const Mat& w, const Vec& b, const Vec& x);

// x_i .* proj1(x_c) + proj2(x_c)
Vec affine_condition(const AffineParams& p, const Vec& x_i, const Vec& x_c);

// Row-batched form used by the decoder: every row of `rows` is conditioned
// by the same control vector.
Mat affine_condition_rows(const AffineParams& p, const Mat& rows, const Vec& x_c);

struct AffineRowsGrads {
    AffineParams params;
    Mat drows;
    Vec dcontrol;
};

// Exact gradients for affine_condition_rows given dL/doutput rows.
AffineRowsGrads affine_condition_rows_backward(const AffineParams& p, const Mat& rows,
                                               const Vec& x_c, const Mat& dout);

} // namespace xspc::nn
