#pragma once
#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <vector>

namespace spad {

// Little-endian scalar packing for the binary blob formats.

inline void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

inline void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

inline void put_f32(std::vector<std::uint8_t>& out, float v) {
  put_u32(out, std::bit_cast<std::uint32_t>(v));
}

inline std::uint16_t get_u16(const std::uint8_t* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

inline std::uint32_t get_u32(const std::uint8_t* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

inline float get_f32(const std::uint8_t* p) { return std::bit_cast<float>(get_u32(p)); }

/// Reads `len` bytes at `offset`; throws FormatError on short read, IoError on open failure.
std::vector<std::uint8_t> read_blob_range(const std::filesystem::path& path, std::uint64_t offset,
                                          std::uint64_t len);

/// Whole-file write/read helpers.
void write_file_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);

} // namespace spad
