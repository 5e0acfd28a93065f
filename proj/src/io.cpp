#include "progrand/io.hpp"

#include <unistd.h>

#include <charconv>
#include <fstream>

#include "progrand/errors.hpp"

namespace progrand {

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    fs::create_directories(dir);
    fs::path tmp = dir / (path.filename().string() + ".tmp" + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        if (!out) throw Error("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string pack_bits(const std::vector<std::uint8_t>& bits) {
    std::string bytes((bits.size() + 7) / 8, '\0');
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i]) bytes[i / 8] = static_cast<char>(bytes[i / 8] | (1 << (i % 8)));
    }
    return bytes;
}

std::vector<std::uint8_t> unpack_bits(const std::string& bytes, std::uint64_t n_bits) {
    if (n_bits > bytes.size() * 8) {
        throw Error("bit count " + std::to_string(n_bits) + " exceeds packed payload of " +
                    std::to_string(bytes.size() * 8) + " bits");
    }
    std::vector<std::uint8_t> bits(n_bits);
    for (std::uint64_t i = 0; i < n_bits; ++i) {
        bits[i] = (static_cast<unsigned char>(bytes[i / 8]) >> (i % 8)) & 1u;
    }
    return bits;
}

std::string ascii_bits(const std::vector<std::uint8_t>& bits) {
    std::string out;
    out.reserve(bits.size() * 2);
    for (std::uint8_t b : bits) {
        out += b ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::vector<std::uint8_t> read_bit_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open bit file: " + path.string());
    std::string raw((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const auto ext = path.extension().string();
    if (ext == ".bin" || ext == ".packed") {
        return unpack_bits(raw, raw.size() * 8);
    }
    std::vector<std::uint8_t> bits;
    bits.reserve(raw.size());
    for (char c : raw) {
        if (c == '0' || c == '1') {
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        } else if (c != '\n' && c != '\r' && c != ' ' && c != '\t') {
            throw ParseError("unexpected character in ASCII bit file " + path.string());
        }
    }
    if (bits.empty()) throw ParseError("bit file is empty: " + path.string());
    return bits;
}

std::string threshold_trace_csv(const std::vector<std::uint32_t>& thresholds) {
    std::string out = "step,threshold\n";
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        out += std::to_string(i) + "," + std::to_string(thresholds[i]) + "\n";
    }
    return out;
}

std::string format_double(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

}  // namespace progrand
