#pragma once

#include <filesystem>
#include <vector>

#include "xspc/nn/params.hpp"

namespace xspc::io {

// Checkpoint layout: one XSPC tensor per named block inside `dir`
// (vectors rank-1, matrices rank-2) plus manifest.txt with one
// "name rows cols role" line per block.
void save_checkpoint(const std::filesystem::path& dir,
                     const std::vector<nn::BlockRef>& blocks);

// Restores every block in place; shapes must match the manifest exactly.
void load_checkpoint(const std::filesystem::path& dir,
                     const std::vector<nn::BlockRef>& blocks);

} // namespace xspc::io
