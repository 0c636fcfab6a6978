#include "xspc/nn/affine.hpp"

#include <string>

#include "xspc/errors.hpp"

namespace xspc::nn {

Vec proj(const Mat& w, const Vec& b, const Vec& x) {
    if (w.cols() != x.size() || w.rows() != b.size())
        throw xspc::ShapeError("proj: w is " + std::to_string(w.rows()) + "x" +
                               std::to_string(w.cols()) + ", b has " + std::to_string(b.size()) +
                               ", x has " + std::to_string(x.size()));
    return w * x + b;
}

Vec affine_condition(const AffineParams& p, const Vec& x_i, const Vec& x_c) {
    if (x_i.size() != p.feature())
        throw xspc::ShapeError("affine_condition: feature size " + std::to_string(x_i.size()) +
                               " does not match params (" + std::to_string(p.feature()) + ")");
    const Vec scale = proj(p.w1, p.b1, x_c);
    const Vec shift = proj(p.w2, p.b2, x_c);
    return x_i.cwiseProduct(scale) + shift;
}

Mat affine_condition_rows(const AffineParams& p, const Mat& rows, const Vec& x_c) {
    if (rows.cols() != p.feature())
        throw xspc::ShapeError("affine_condition_rows: row width " + std::to_string(rows.cols()) +
                               " does not match params (" + std::to_string(p.feature()) + ")");
    const Vec scale = proj(p.w1, p.b1, x_c);
    const Vec shift = proj(p.w2, p.b2, x_c);
    Mat out = rows.array().rowwise() * scale.transpose().array();
    out.rowwise() += shift.transpose();
    return out;
}

AffineRowsGrads affine_condition_rows_backward(const AffineParams& p, const Mat& rows,
                                               const Vec& x_c, const Mat& dout) {
    if (dout.rows() != rows.rows() || dout.cols() != rows.cols())
        throw xspc::ShapeError("affine backward: gradient is " + std::to_string(dout.rows()) +
                               "x" + std::to_string(dout.cols()) + " but input was " +
                               std::to_string(rows.rows()) + "x" + std::to_string(rows.cols()));
    const Vec scale = proj(p.w1, p.b1, x_c);

    AffineRowsGrads g;
    g.params = AffineParams::zeros(p.feature(), p.control());
    g.drows = dout.array().rowwise() * scale.transpose().array();

    // dscale_j = sum_t dout(t,j) * rows(t,j); dshift_j = sum_t dout(t,j)
    const Vec dscale = dout.cwiseProduct(rows).colwise().sum().transpose();
    const Vec dshift = dout.colwise().sum().transpose();

    g.params.w1.noalias() = dscale * x_c.transpose();
    g.params.b1 = dscale;
    g.params.w2.noalias() = dshift * x_c.transpose();
    g.params.b2 = dshift;
    g.dcontrol = p.w1.transpose() * dscale + p.w2.transpose() * dshift;
    return g;
}

} // namespace xspc::nn
