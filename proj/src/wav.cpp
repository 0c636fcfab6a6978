#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <string>

#include "xspc/audio.hpp"
#include "xspc/errors.hpp"
#include "xspc/tensor_io.hpp"

namespace xspc::audio {

namespace {

std::uint32_t rd_u32(std::istream& is, std::streamoff at, const char* what) {
    unsigned char b[4];
    is.read(reinterpret_cast<char*>(b), 4);
    if (!is)
        throw xspc::IoError(std::string("truncated WAV while reading ") + what +
                            " at byte offset " + std::to_string(at));
    return static_cast<std::uint32_t>(b[0]) | (b[1] << 8u) | (b[2] << 16u) |
           (static_cast<std::uint32_t>(b[3]) << 24u);
}

std::uint16_t rd_u16(std::istream& is, std::streamoff at, const char* what) {
    unsigned char b[2];
    is.read(reinterpret_cast<char*>(b), 2);
    if (!is)
        throw xspc::IoError(std::string("truncated WAV while reading ") + what +
                            " at byte offset " + std::to_string(at));
    return static_cast<std::uint16_t>(b[0] | (b[1] << 8u));
}

void wr_u32(std::ostream& os, std::uint32_t v) {
    const char b[4] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF),
                       static_cast<char>((v >> 16) & 0xFF), static_cast<char>((v >> 24) & 0xFF)};
    os.write(b, 4);
}

void wr_u16(std::ostream& os, std::uint16_t v) {
    const char b[2] = {static_cast<char>(v & 0xFF), static_cast<char>((v >> 8) & 0xFF)};
    os.write(b, 2);
}

} // namespace

AudioClip read_wav(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw xspc::IoError("cannot open " + path.string());

    char tag[4];
    is.read(tag, 4);
    if (!is || std::memcmp(tag, "RIFF", 4) != 0)
        throw xspc::IoError(path.string() + ": missing RIFF header");
    rd_u32(is, 4, "RIFF size");
    is.read(tag, 4);
    if (!is || std::memcmp(tag, "WAVE", 4) != 0)
        throw xspc::IoError(path.string() + ": not a WAVE file");

    bool have_fmt = false;
    std::uint16_t format = 0, channels = 0, bits = 0;
    std::uint32_t rate = 0;
    AudioClip clip;

    std::streamoff offset = 12;
    while (true) {
        is.read(tag, 4);
        if (is.eof()) break;
        if (!is)
            throw xspc::IoError(path.string() + ": truncated chunk header at byte offset " +
                                std::to_string(offset));
        const std::uint32_t size = rd_u32(is, offset + 4, "chunk size");
        offset += 8;

        if (std::memcmp(tag, "fmt ", 4) == 0) {
            if (size < 16)
                throw xspc::IoError(path.string() + ": fmt chunk too small (" +
                                    std::to_string(size) + " bytes)");
            format = rd_u16(is, offset, "format tag");
            channels = rd_u16(is, offset + 2, "channel count");
            rate = rd_u32(is, offset + 4, "sample rate");
            rd_u32(is, offset + 8, "byte rate");
            rd_u16(is, offset + 12, "block align");
            bits = rd_u16(is, offset + 14, "bits per sample");
            is.seekg(size - 16, std::ios::cur);
            have_fmt = true;
        } else if (std::memcmp(tag, "data", 4) == 0) {
            if (!have_fmt)
                throw xspc::IoError(path.string() + ": data chunk before fmt chunk");
            if (format != 1)
                throw xspc::IoError(path.string() + ": unsupported format tag " +
                                    std::to_string(format) + " (need PCM = 1)");
            if (channels != 1)
                throw xspc::IoError(path.string() + ": unsupported channel count " +
                                    std::to_string(channels) + " (need mono = 1)");
            if (bits != 16)
                throw xspc::IoError(path.string() + ": unsupported bits per sample " +
                                    std::to_string(bits) + " (need 16)");
            const std::size_t n = size / 2;
            clip.samples.resize(n);
            for (std::size_t i = 0; i < n; ++i) {
                const auto u = rd_u16(is, offset + static_cast<std::streamoff>(2 * i), "sample");
                clip.samples[i] = static_cast<std::int16_t>(u) / 32768.0;
            }
            clip.sample_rate = static_cast<int>(rate);
            return clip;
        } else {
            is.seekg(size + (size & 1u), std::ios::cur); // chunks are word-aligned
        }
        offset += size + (size & 1u);
        if (!is)
            throw xspc::IoError(path.string() + ": truncated chunk body at byte offset " +
                                std::to_string(offset));
    }
    throw xspc::IoError(path.string() + ": no data chunk found");
}

void write_wav(const std::filesystem::path& path, const AudioClip& clip) {
    if (clip.sample_rate <= 0)
        throw xspc::ConfigError("write_wav: sample_rate must be positive");
    io::atomic_write(path, [&](std::ostream& os) {
        const std::uint32_t data_bytes = static_cast<std::uint32_t>(clip.samples.size() * 2);
        os.write("RIFF", 4);
        wr_u32(os, 36 + data_bytes);
        os.write("WAVE", 4);
        os.write("fmt ", 4);
        wr_u32(os, 16);
        wr_u16(os, 1); // PCM
        wr_u16(os, 1); // mono
        wr_u32(os, static_cast<std::uint32_t>(clip.sample_rate));
        wr_u32(os, static_cast<std::uint32_t>(clip.sample_rate * 2));
        wr_u16(os, 2);
        wr_u16(os, 16);
        os.write("data", 4);
        wr_u32(os, data_bytes);
        for (double s : clip.samples) {
            long v = std::lround(s * 32768.0);
            v = std::clamp(v, -32768L, 32767L);
            wr_u16(os, static_cast<std::uint16_t>(static_cast<std::int16_t>(v)));
        }
    });
}

} // namespace xspc::audio
