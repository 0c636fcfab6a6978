#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <vector>

#include "xspc/linalg.hpp"

namespace xspc::io {

// XSPC v1 tensor file: magic "XSPC", u32 LE version=1, u32 rank,
// rank x u32 dims, row-major IEEE-754 f32 LE payload.
struct Tensor {
    std::vector<std::uint32_t> dims;
    std::vector<float> data; // row-major

    std::size_t element_count() const;
};

void write_xspc(const std::filesystem::path& path, const Tensor& t);
Tensor read_xspc(const std::filesystem::path& path);

// rank-2 / rank-1 Eigen convenience wrappers (doubles are narrowed to f32)
void write_xspc(const std::filesystem::path& path, const Mat& m);
void write_xspc(const std::filesystem::path& path, const Vec& v);
Mat read_xspc_mat(const std::filesystem::path& path);
Vec read_xspc_vec(const std::filesystem::path& path);

// two-column contour CSV: "frame_index,value" rows, '.' decimal separator,
// no header
void write_contour_csv(const std::filesystem::path& path, const Vec& v);
Vec read_contour_csv(const std::filesystem::path& path);

// reads .csv or .xspc rank-1 depending on extension
Vec read_contour_any(const std::filesystem::path& path);

// P5 8-bit PGM, one image row per frame (matrix row), log-compressed
void write_pgm_log(const std::filesystem::path& path, const Mat& m);

// Writes through "<path>.tmp" then renames, so failures never leave a
// partial file at the destination.
void atomic_write(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& body);

} // namespace xspc::io
