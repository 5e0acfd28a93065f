#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace progrand {

// Writes via a temp file in the target directory followed by a rename, so
// concurrent runs never observe partial files.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

// Packed bitstream: 8 bits per byte, bit i of byte j is bit j*8+i of the
// stream (LSB first); the final byte is zero padded.
std::string pack_bits(const std::vector<std::uint8_t>& bits);
std::vector<std::uint8_t> unpack_bits(const std::string& bytes, std::uint64_t n_bits);

// One '0' or '1' character per line.
std::string ascii_bits(const std::vector<std::uint8_t>& bits);

// Reads a bitstream file. ".bin"/".packed" files are unpacked whole (length
// a multiple of 8); anything else is parsed as ASCII 0/1, whitespace ignored.
std::vector<std::uint8_t> read_bit_file(const std::filesystem::path& path);

std::string threshold_trace_csv(const std::vector<std::uint32_t>& thresholds);

// Shortest round-trip decimal form, locale independent.
std::string format_double(double value);

}  // namespace progrand
