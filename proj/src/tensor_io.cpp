#include "xspc/tensor_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "xspc/errors.hpp"

namespace xspc::io {

namespace {

constexpr char kMagic[4] = {'X', 'S', 'P', 'C'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xFF),
                          static_cast<unsigned char>((v >> 8) & 0xFF),
                          static_cast<unsigned char>((v >> 16) & 0xFF),
                          static_cast<unsigned char>((v >> 24) & 0xFF)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& is, const std::string& what, std::streamoff offset) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is)
        throw xspc::IoError("truncated tensor file while reading " + what + " at byte offset " +
                            std::to_string(offset));
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f32(std::ostream& os, float v) {
    std::uint32_t bits;
    std::memcpy(&bits, &v, 4);
    put_u32(os, bits);
}

} // namespace

std::size_t Tensor::element_count() const {
    std::size_t n = 1;
    for (auto d : dims) n *= d;
    return dims.empty() ? 0 : n;
}

void atomic_write(const std::filesystem::path& path,
                  const std::function<void(std::ostream&)>& body) {
    const auto tmp = std::filesystem::path(path.string() + ".tmp");
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw xspc::IoError("cannot open " + tmp.string() + " for writing");
        body(os);
        os.flush();
        if (!os) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw xspc::IoError("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw xspc::IoError("cannot rename " + tmp.string() + " to " + path.string());
    }
}

void write_xspc(const std::filesystem::path& path, const Tensor& t) {
    if (t.dims.empty()) throw xspc::ShapeError("refusing to write rank-0 tensor");
    if (t.element_count() != t.data.size())
        throw xspc::ShapeError("tensor dims give " + std::to_string(t.element_count()) +
                               " elements but payload has " + std::to_string(t.data.size()));
    atomic_write(path, [&](std::ostream& os) {
        os.write(kMagic, 4);
        put_u32(os, kVersion);
        put_u32(os, static_cast<std::uint32_t>(t.dims.size()));
        for (auto d : t.dims) put_u32(os, d);
        for (float v : t.data) put_f32(os, v);
    });
}

Tensor read_xspc(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw xspc::IoError("cannot open " + path.string());

    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, kMagic, 4) != 0)
        throw xspc::IoError(path.string() + ": bad magic, not an XSPC tensor");

    const auto version = get_u32(is, "version", 4);
    if (version != kVersion)
        throw xspc::IoError(path.string() + ": unsupported version " + std::to_string(version));

    const auto rank = get_u32(is, "rank", 8);
    if (rank == 0 || rank > 8)
        throw xspc::IoError(path.string() + ": implausible rank " + std::to_string(rank));

    Tensor t;
    t.dims.resize(rank);
    for (std::uint32_t i = 0; i < rank; ++i)
        t.dims[i] = get_u32(is, "dim " + std::to_string(i), 12 + 4 * i);

    const std::size_t n = t.element_count();
    t.data.resize(n);
    const std::streamoff payload_at = 12 + 4 * static_cast<std::streamoff>(rank);
    for (std::size_t i = 0; i < n; ++i) {
        const auto bits = get_u32(is, "element " + std::to_string(i),
                                  payload_at + 4 * static_cast<std::streamoff>(i));
        std::memcpy(&t.data[i], &bits, 4);
    }
    return t;
}

void write_xspc(const std::filesystem::path& path, const Mat& m) {
    Tensor t;
    t.dims = {static_cast<std::uint32_t>(m.rows()), static_cast<std::uint32_t>(m.cols())};
    t.data.reserve(static_cast<std::size_t>(m.size()));
    for (long r = 0; r < m.rows(); ++r)
        for (long c = 0; c < m.cols(); ++c) t.data.push_back(static_cast<float>(m(r, c)));
    write_xspc(path, t);
}

void write_xspc(const std::filesystem::path& path, const Vec& v) {
    Tensor t;
    t.dims = {static_cast<std::uint32_t>(v.size())};
    t.data.reserve(static_cast<std::size_t>(v.size()));
    for (long i = 0; i < v.size(); ++i) t.data.push_back(static_cast<float>(v(i)));
    write_xspc(path, t);
}

Mat read_xspc_mat(const std::filesystem::path& path) {
    const Tensor t = read_xspc(path);
    if (t.dims.size() != 2)
        throw xspc::ShapeError(path.string() + ": expected rank-2 tensor, got rank " +
                               std::to_string(t.dims.size()));
    Mat m(t.dims[0], t.dims[1]);
    std::size_t i = 0;
    for (long r = 0; r < m.rows(); ++r)
        for (long c = 0; c < m.cols(); ++c) m(r, c) = t.data[i++];
    return m;
}

Vec read_xspc_vec(const std::filesystem::path& path) {
    const Tensor t = read_xspc(path);
    if (t.dims.size() != 1)
        throw xspc::ShapeError(path.string() + ": expected rank-1 tensor, got rank " +
                               std::to_string(t.dims.size()));
    Vec v(t.dims[0]);
    for (long i = 0; i < v.size(); ++i) v(i) = t.data[static_cast<std::size_t>(i)];
    return v;
}

void write_contour_csv(const std::filesystem::path& path, const Vec& v) {
    atomic_write(path, [&](std::ostream& os) {
        char line[64];
        for (long i = 0; i < v.size(); ++i) {
            std::snprintf(line, sizeof(line), "%ld,%.9g\n", i, v(i));
            os << line;
        }
    });
}

Vec read_contour_csv(const std::filesystem::path& path) {
    std::ifstream is(path);
    if (!is) throw xspc::IoError("cannot open " + path.string());
    std::vector<double> vals;
    std::string line;
    long line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw xspc::IoError(path.string() + ":" + std::to_string(line_no) +
                                ": expected 'frame_index,value'");
        try {
            vals.push_back(std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            throw xspc::IoError(path.string() + ":" + std::to_string(line_no) +
                                ": cannot parse value '" + line.substr(comma + 1) + "'");
        }
    }
    Vec v(static_cast<long>(vals.size()));
    for (std::size_t i = 0; i < vals.size(); ++i) v(static_cast<long>(i)) = vals[i];
    return v;
}

Vec read_contour_any(const std::filesystem::path& path) {
    if (path.extension() == ".csv") return read_contour_csv(path);
    return read_xspc_vec(path);
}

void write_pgm_log(const std::filesystem::path& path, const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0) throw xspc::ShapeError("refusing to write empty PGM");
    // log-compress, then scale the used range onto 0..255
    Mat logm = (m.array().max(0.0) + 1e-10).log10().matrix();
    const double lo = logm.minCoeff();
    const double hi = logm.maxCoeff();
    const double span = (hi > lo) ? (hi - lo) : 1.0;
    atomic_write(path, [&](std::ostream& os) {
        os << "P5\n" << m.cols() << " " << m.rows() << "\n255\n";
        for (long r = 0; r < m.rows(); ++r)
            for (long c = 0; c < m.cols(); ++c) {
                const double t = (logm(r, c) - lo) / span;
                os.put(static_cast<char>(static_cast<unsigned char>(std::lround(t * 255.0))));
            }
    });
}

} // namespace xspc::io
