#pragma once

#include <span>
#include <vector>

#include "xspc/nn/params.hpp"

namespace xspc::nn {

struct AdamConfig {
    double lr = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

// Bias-corrected update of one flat span, step counts from 1.
void adam_update(std::span<double> params, std::span<const double> grads, std::span<double> m,
                 std::span<double> v, long step, const AdamConfig& cfg);

// Moment buffers matching an arbitrary block list. Block order and sizes must
// stay identical across calls.
class AdamState {
public:
    explicit AdamState(const std::vector<BlockRef>& blocks);

    void update(const std::vector<BlockRef>& params, const std::vector<BlockRef>& grads,
                const AdamConfig& cfg);

    long step() const { return step_; }

private:
    std::vector<double> m_, v_;
    std::vector<long> sizes_;
    long step_ = 0;
};

} // namespace xspc::nn
