#pragma once
#include <cstddef>
#include <cstdint>

namespace spad {

/// CRC-32 (IEEE reflected, polynomial 0xEDB88320). `crc` of a previous call
/// may be passed to continue a running checksum.
std::uint32_t crc32(const void* data, std::size_t len, std::uint32_t crc = 0);

} // namespace spad
