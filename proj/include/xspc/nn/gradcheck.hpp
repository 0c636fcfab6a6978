#pragma once

#include <functional>
#include <string>
#include <vector>

#include "xspc/nn/params.hpp"

namespace xspc::nn {

struct GradCheckRow {
    std::string block;
    long n_params = 0;
    double max_rel_err = 0.0;
    bool pass = false;
};

struct GradCheckReport {
    std::vector<GradCheckRow> rows;
    double eps = 1e-5;
    double tol = 1e-4;

    bool pass() const;
    double max_rel_err() const;
};

// Central finite differences over every scalar reachable through `params`,
// against the matching `analytic` blocks. The loss closure must re-evaluate
// the forward pass from the live parameter memory. Per-scalar error is
// |analytic - fd| / max(|analytic|, |fd|, 1e-8); a block passes when its max
// stays below tol. Throws NumericError if the loss goes non-finite, naming
// the parameter coordinate.
GradCheckReport check_gradients(const std::vector<BlockRef>& params,
                                const std::vector<BlockRef>& analytic,
                                const std::function<double()>& loss, double eps = 1e-5,
                                double tol = 1e-4);

// Self-contained checks over randomized fixtures. Sequence losses are MSE
// of the hidden states against a fixed random target. Input, initial-state,
// and control gradients are checked alongside the parameter blocks.
// bug_scale != 0 corrupts one analytic block first (harness knob for testing
// that the checker catches wrong gradients).
GradCheckReport gradcheck_lstm(int hidden, int input, int seq, std::uint64_t seed,
                               double eps = 1e-5, double tol = 1e-4, double bug_scale = 0.0);
GradCheckReport gradcheck_cglstm(int hidden, int input, int control, int seq, std::uint64_t seed,
                                 double eps = 1e-5, double tol = 1e-4, double bug_scale = 0.0);
GradCheckReport gradcheck_affine(int feature, int control, std::uint64_t seed, double eps = 1e-5,
                                 double tol = 1e-4, double bug_scale = 0.0);

} // namespace xspc::nn
