#include "noiserect/vlt_io.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

namespace noiserect {

namespace {

void append_f32_le(std::string& out, float value) {
    std::uint32_t bits;
    std::memcpy(&bits, &value, sizeof(bits));
    out.push_back(static_cast<char>(bits & 0xFF));
    out.push_back(static_cast<char>((bits >> 8) & 0xFF));
    out.push_back(static_cast<char>((bits >> 16) & 0xFF));
    out.push_back(static_cast<char>((bits >> 24) & 0xFF));
}

float read_f32_le(const char* p) {
    const auto b = [&](int i) { return static_cast<std::uint32_t>(static_cast<unsigned char>(p[i])); };
    const std::uint32_t bits = b(0) | (b(1) << 8) | (b(2) << 16) | (b(3) << 24);
    float value;
    std::memcpy(&value, &bits, sizeof(value));
    return value;
}

}  // namespace

std::string vlt1_serialize(const VideoLatent& video) {
    std::ostringstream header;
    header << "VLT1 " << video.frame_count() << ' ' << video.frame_size() << ' '
           << video.dims().channels << ' ' << video.dims().height << ' ' << video.dims().width
           << '\n';
    std::string out = header.str();
    out.reserve(out.size() + video.total_size() * 4);
    for (double v : video.data()) {
        append_f32_le(out, static_cast<float>(v));
    }
    return out;
}

VideoLatent vlt1_parse(std::string_view bytes) {
    const std::size_t eol = bytes.find('\n');
    if (eol == std::string_view::npos) {
        throw Error::io("VLT1: missing header line");
    }
    std::istringstream header{std::string(bytes.substr(0, eol))};
    std::string magic;
    long frames = 0, frame_size = 0;
    LatentDims dims;
    header >> magic >> frames >> frame_size >> dims.channels >> dims.height >> dims.width;
    if (header.fail() || magic != "VLT1") {
        throw Error::io("VLT1: malformed header");
    }
    if (frames < 1 || frame_size < 1 || dims.size() != static_cast<std::size_t>(frame_size)) {
        throw Error::io("VLT1: header dims inconsistent (D must equal C*H*W)");
    }
    const std::size_t expected = static_cast<std::size_t>(frames) * frame_size * 4;
    const std::string_view payload = bytes.substr(eol + 1);
    if (payload.size() != expected) {
        throw Error::io("VLT1: payload has " + std::to_string(payload.size()) +
                        " bytes, expected " + std::to_string(expected));
    }
    std::vector<double> data(static_cast<std::size_t>(frames) * frame_size);
    for (std::size_t i = 0; i < data.size(); ++i) {
        const float v = read_f32_le(payload.data() + i * 4);
        if (!std::isfinite(v)) {
            throw Error::io("VLT1: non-finite value at index " + std::to_string(i));
        }
        data[i] = static_cast<double>(v);
    }
    return VideoLatent(std::move(data), static_cast<int>(frames), dims);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error::io("cannot open " + tmp.string() + " for writing");
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) {
            throw Error::io("short write to " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw Error::io("rename " + tmp.string() + " -> " + path.string() + ": " + ec.message());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error::io("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_vlt1(const std::filesystem::path& path, const VideoLatent& video) {
    write_file_atomic(path, vlt1_serialize(video));
}

VideoLatent read_vlt1(const std::filesystem::path& path) {
    return vlt1_parse(read_file(path));
}

}  // namespace noiserect
