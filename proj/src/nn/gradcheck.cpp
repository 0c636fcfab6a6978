#include "xspc/nn/gradcheck.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "xspc/errors.hpp"
#include "xspc/nn/affine.hpp"
#include "xspc/nn/cell.hpp"

namespace xspc::nn {

bool GradCheckReport::pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const GradCheckRow& r) { return r.pass; });
}

double GradCheckReport::max_rel_err() const {
    double m = 0.0;
    for (const auto& r : rows) m = std::max(m, r.max_rel_err);
    return m;
}

GradCheckReport check_gradients(const std::vector<BlockRef>& params,
                                const std::vector<BlockRef>& analytic,
                                const std::function<double()>& loss, double eps, double tol) {
    if (params.size() != analytic.size())
        throw xspc::ShapeError("check_gradients: block lists differ in length");

    GradCheckReport report;
    report.eps = eps;
    report.tol = tol;
    for (std::size_t b = 0; b < params.size(); ++b) {
        if (params[b].size != analytic[b].size)
            throw xspc::ShapeError("check_gradients: block '" + params[b].name +
                                   "' sizes differ");
        GradCheckRow row;
        row.block = params[b].name;
        row.n_params = params[b].size;
        for (long k = 0; k < params[b].size; ++k) {
            double& theta = params[b].data[k];
            const double saved = theta;
            theta = saved + eps;
            const double up = loss();
            theta = saved - eps;
            const double down = loss();
            theta = saved;
            if (!std::isfinite(up) || !std::isfinite(down))
                throw xspc::NumericError("non-finite loss while probing " + params[b].name +
                                         "[" + std::to_string(k) + "]");
            const double fd = (up - down) / (2.0 * eps);
            const double an = analytic[b].data[k];
            const double denom = std::max({std::fabs(an), std::fabs(fd), 1e-8});
            row.max_rel_err = std::max(row.max_rel_err, std::fabs(an - fd) / denom);
        }
        row.pass = row.max_rel_err < tol;
        report.rows.push_back(std::move(row));
    }
    return report;
}

namespace {

void randomize(std::vector<BlockRef> blocks, Rng& rng, double bound) {
    for (auto& b : blocks)
        for (long k = 0; k < b.size; ++k) b.data[k] = rng.uniform(-bound, bound);
}

Mat random_mat(long rows, long cols, Rng& rng, double bound) {
    Mat m(rows, cols);
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c) m(r, c) = rng.uniform(-bound, bound);
    return m;
}

// mean squared error against the target and its per-step h gradients
double seq_loss(const Mat& h_seq, const Mat& target) {
    return (h_seq - target).squaredNorm() / static_cast<double>(h_seq.size());
}

Mat seq_loss_grad(const Mat& h_seq, const Mat& target) {
    return 2.0 * (h_seq - target) / static_cast<double>(h_seq.size());
}

void apply_bug(std::vector<BlockRef> analytic, double bug_scale) {
    if (bug_scale == 0.0 || analytic.empty()) return;
    for (long k = 0; k < analytic[0].size; ++k) analytic[0].data[k] *= 1.0 + bug_scale;
}

} // namespace

GradCheckReport gradcheck_lstm(int hidden, int input, int seq, std::uint64_t seed, double eps,
                               double tol, double bug_scale) {
    Rng rng(seed);
    LstmParams p = LstmParams::zeros(hidden, input);
    randomize(p.blocks(), rng, 0.7);
    Mat x_seq = random_mat(seq, input, rng, 1.0);
    CellState init{random_mat(hidden, 1, rng, 0.5).col(0), random_mat(hidden, 1, rng, 0.5).col(0)};
    const Mat target = random_mat(seq, hidden, rng, 0.8);

    auto fwd = lstm_forward(p, x_seq, init);
    LstmSeqGrads grads = lstm_backward(p, fwd.tape, seq_loss_grad(fwd.h_seq, target));

    auto params = p.blocks();
    params.push_back(block_ref("x_seq", x_seq));
    params.push_back(block_ref("init_h", init.h));
    params.push_back(block_ref("init_cell", init.cell));

    auto analytic = grads.params.blocks();
    analytic.push_back(block_ref("x_seq", grads.dx_seq));
    analytic.push_back(block_ref("init_h", grads.dinit.h));
    analytic.push_back(block_ref("init_cell", grads.dinit.cell));
    apply_bug(analytic, bug_scale);

    auto loss = [&]() { return seq_loss(lstm_forward(p, x_seq, init).h_seq, target); };
    return check_gradients(params, analytic, loss, eps, tol);
}

GradCheckReport gradcheck_cglstm(int hidden, int input, int control, int seq, std::uint64_t seed,
                                 double eps, double tol, double bug_scale) {
    Rng rng(seed);
    CglstmParams p = CglstmParams::zeros(hidden, input, control);
    randomize(p.blocks(), rng, 0.7);
    Mat x_seq = random_mat(seq, input, rng, 1.0);
    ControlVector c{random_mat(control, 1, rng, 1.0).col(0)};
    CellState init{random_mat(hidden, 1, rng, 0.5).col(0), random_mat(hidden, 1, rng, 0.5).col(0)};
    const Mat target = random_mat(seq, hidden, rng, 0.8);

    auto fwd = cglstm_forward(p, x_seq, c, init);
    CglstmSeqGrads grads = cglstm_backward(p, fwd.tape, seq_loss_grad(fwd.h_seq, target));

    auto params = p.blocks();
    params.push_back(block_ref("x_seq", x_seq));
    params.push_back(block_ref("control", c.c));
    params.push_back(block_ref("init_h", init.h));
    params.push_back(block_ref("init_cell", init.cell));

    auto analytic = grads.params.blocks();
    analytic.push_back(block_ref("x_seq", grads.dx_seq));
    analytic.push_back(block_ref("control", grads.dcontrol));
    analytic.push_back(block_ref("init_h", grads.dinit.h));
    analytic.push_back(block_ref("init_cell", grads.dinit.cell));
    apply_bug(analytic, bug_scale);

    auto loss = [&]() { return seq_loss(cglstm_forward(p, x_seq, c, init).h_seq, target); };
    return check_gradients(params, analytic, loss, eps, tol);
}

GradCheckReport gradcheck_affine(int feature, int control, std::uint64_t seed, double eps,
                                 double tol, double bug_scale) {
    Rng rng(seed);
    AffineParams p = AffineParams::zeros(feature, control);
    randomize(p.blocks(), rng, 0.7);
    Mat x = random_mat(1, feature, rng, 1.0);
    Vec c = random_mat(control, 1, rng, 1.0).col(0);
    const Mat target = random_mat(1, feature, rng, 0.8);

    const Mat out = affine_condition_rows(p, x, c);
    AffineRowsGrads grads = affine_condition_rows_backward(p, x, c, seq_loss_grad(out, target));

    auto params = p.blocks();
    params.push_back(block_ref("x", x));
    params.push_back(block_ref("control", c));

    auto analytic = grads.params.blocks();
    analytic.push_back(block_ref("x", grads.drows));
    analytic.push_back(block_ref("control", grads.dcontrol));
    apply_bug(analytic, bug_scale);

    auto loss = [&]() { return seq_loss(affine_condition_rows(p, x, c), target); };
    return check_gradients(params, analytic, loss, eps, tol);
}

} // namespace xspc::nn
