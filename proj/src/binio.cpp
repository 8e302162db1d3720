#include "spad/binio.hpp"

#include <fstream>

#include "spad/error.hpp"

namespace spad {

std::vector<std::uint8_t> read_blob_range(const std::filesystem::path& path, std::uint64_t offset,
                                          std::uint64_t len) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open: " + path.string());
  is.seekg(static_cast<std::streamoff>(offset));
  std::vector<std::uint8_t> buf(len);
  is.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(len));
  if (static_cast<std::uint64_t>(is.gcount()) != len)
    throw FormatError("truncated blob: " + path.string() + " (wanted " + std::to_string(len) +
                      " bytes at offset " + std::to_string(offset) + ")");
  return buf;
}

void write_file_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path.string());
  os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!os.flush()) throw IoError("write failed: " + path.string());
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary | std::ios::ate);
  if (!is) throw IoError("cannot open: " + path.string());
  const auto size = is.tellg();
  is.seekg(0);
  std::vector<std::uint8_t> buf(static_cast<std::size_t>(size));
  is.read(reinterpret_cast<char*>(buf.data()), size);
  if (is.gcount() != size) throw IoError("short read: " + path.string());
  return buf;
}

} // namespace spad
