#include "xspc/checkpoint.hpp"

#include <fstream>
#include <string>

#include "xspc/errors.hpp"
#include "xspc/tensor_io.hpp"

namespace xspc::io {

namespace {

std::filesystem::path tensor_path(const std::filesystem::path& dir, const std::string& name) {
    std::string file = name;
    for (char& ch : file)
        if (ch == '/' || ch == '\\') ch = '_';
    return dir / (file + ".xspc");
}

} // namespace

void save_checkpoint(const std::filesystem::path& dir,
                     const std::vector<nn::BlockRef>& blocks) {
    std::filesystem::create_directories(dir);
    for (const auto& b : blocks) {
        Tensor t;
        if (b.cols == 1)
            t.dims = {static_cast<std::uint32_t>(b.rows)};
        else
            t.dims = {static_cast<std::uint32_t>(b.rows), static_cast<std::uint32_t>(b.cols)};
        t.data.resize(static_cast<std::size_t>(b.size));
        // Eigen storage is column-major; the file is row-major
        for (long r = 0; r < b.rows; ++r)
            for (long c = 0; c < b.cols; ++c)
                t.data[static_cast<std::size_t>(r * b.cols + c)] =
                    static_cast<float>(b.data[c * b.rows + r]);
        write_xspc(tensor_path(dir, b.name), t);
    }
    atomic_write(dir / "manifest.txt", [&](std::ostream& os) {
        for (const auto& b : blocks)
            os << b.name << " " << b.rows << " " << b.cols << " parameter\n";
    });
}

void load_checkpoint(const std::filesystem::path& dir,
                     const std::vector<nn::BlockRef>& blocks) {
    for (const auto& b : blocks) {
        const Tensor t = read_xspc(tensor_path(dir, b.name));
        const long rows = t.dims.empty() ? 0 : static_cast<long>(t.dims[0]);
        const long cols = t.dims.size() > 1 ? static_cast<long>(t.dims[1]) : 1;
        if (rows != b.rows || cols != b.cols)
            throw xspc::ShapeError("checkpoint block '" + b.name + "' is " +
                                   std::to_string(rows) + "x" + std::to_string(cols) +
                                   " but expected " + std::to_string(b.rows) + "x" +
                                   std::to_string(b.cols));
        for (long r = 0; r < b.rows; ++r)
            for (long c = 0; c < b.cols; ++c)
                b.data[c * b.rows + r] =
                    t.data[static_cast<std::size_t>(r * b.cols + c)];
    }
}

} // namespace xspc::io
