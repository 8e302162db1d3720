#pragma once
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace spad {

/// One `[name]` block of key = value lines. Keys may repeat (e.g. one
/// `label` line per bounding box). Order is preserved on write.
struct KvSection {
  std::string name; // empty for the file header block
  std::vector<std::pair<std::string, std::string>> entries;

  [[nodiscard]] bool has(const std::string& key) const;
  [[nodiscard]] const std::string& get(const std::string& key) const; // throws FormatError if absent
  [[nodiscard]] std::string get_or(const std::string& key, const std::string& fallback) const;
  [[nodiscard]] long get_long(const std::string& key) const;
  [[nodiscard]] std::uint64_t get_u64(const std::string& key) const;
  [[nodiscard]] double get_double(const std::string& key) const;
  [[nodiscard]] std::vector<std::string> get_all(const std::string& key) const;

  void set(const std::string& key, std::string value);
  void set(const std::string& key, long value);
  void set(const std::string& key, std::uint64_t value);
  void set(const std::string& key, double value); // round-trip exact (%.17g)
  void add(const std::string& key, std::string value);
};

/// Line-oriented `key = value` manifest with optional `[section]` blocks.
/// `#` starts a comment, blank lines are ignored, values run to end of line.
struct KvFile {
  KvSection header;
  std::vector<KvSection> sections;

  KvSection& add_section(const std::string& name);
  [[nodiscard]] const KvSection* find(const std::string& name) const;

  void write(std::ostream& os) const;
  void save(const std::filesystem::path& path) const;
  static KvFile parse(std::istream& is);
  static KvFile load(const std::filesystem::path& path);
};

} // namespace spad
