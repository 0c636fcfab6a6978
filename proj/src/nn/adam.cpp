#include "xspc/nn/adam.hpp"

#include <cmath>
#include <string>

#include "xspc/errors.hpp"

namespace xspc::nn {

void adam_update(std::span<double> params, std::span<const double> grads, std::span<double> m,
                 std::span<double> v, long step, const AdamConfig& cfg) {
    if (params.size() != grads.size() || params.size() != m.size() || params.size() != v.size())
        throw xspc::ShapeError("adam_update: span sizes differ (params " +
                               std::to_string(params.size()) + ", grads " +
                               std::to_string(grads.size()) + ")");
    const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(step));
    const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(step));
    for (std::size_t k = 0; k < params.size(); ++k) {
        m[k] = cfg.beta1 * m[k] + (1.0 - cfg.beta1) * grads[k];
        v[k] = cfg.beta2 * v[k] + (1.0 - cfg.beta2) * grads[k] * grads[k];
        const double mhat = m[k] / bc1;
        const double vhat = v[k] / bc2;
        params[k] -= cfg.lr * mhat / (std::sqrt(vhat) + cfg.eps);
    }
}

AdamState::AdamState(const std::vector<BlockRef>& blocks) {
    long total = 0;
    sizes_.reserve(blocks.size());
    for (const auto& b : blocks) {
        sizes_.push_back(b.size);
        total += b.size;
    }
    m_.assign(static_cast<std::size_t>(total), 0.0);
    v_.assign(static_cast<std::size_t>(total), 0.0);
}

void AdamState::update(const std::vector<BlockRef>& params, const std::vector<BlockRef>& grads,
                       const AdamConfig& cfg) {
    if (params.size() != grads.size() || params.size() != sizes_.size())
        throw xspc::ShapeError("AdamState: block count changed between calls");
    ++step_;
    std::size_t offset = 0;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i].size != sizes_[i] || grads[i].size != sizes_[i])
            throw xspc::ShapeError("AdamState: block '" + params[i].name + "' changed size");
        const auto n = static_cast<std::size_t>(sizes_[i]);
        adam_update({params[i].data, n}, {grads[i].data, n}, {m_.data() + offset, n},
                    {v_.data() + offset, n}, step_, cfg);
        offset += n;
    }
}

} // namespace xspc::nn
