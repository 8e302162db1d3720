#include "spad/kvfile.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "spad/error.hpp"

namespace spad {
namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

} // namespace

bool KvSection::has(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return true;
  return false;
}

const std::string& KvSection::get(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  throw FormatError("missing key '" + key + "'" + (name.empty() ? "" : " in [" + name + "]"));
}

std::string KvSection::get_or(const std::string& key, const std::string& fallback) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  return fallback;
}

long KvSection::get_long(const std::string& key) const {
  try {
    return std::stol(get(key));
  } catch (const std::logic_error&) {
    throw FormatError("key '" + key + "' is not an integer");
  }
}

std::uint64_t KvSection::get_u64(const std::string& key) const {
  try {
    return std::stoull(get(key));
  } catch (const std::logic_error&) {
    throw FormatError("key '" + key + "' is not an unsigned integer");
  }
}

double KvSection::get_double(const std::string& key) const {
  try {
    return std::stod(get(key));
  } catch (const std::logic_error&) {
    throw FormatError("key '" + key + "' is not a number");
  }
}

std::vector<std::string> KvSection::get_all(const std::string& key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries)
    if (k == key) out.push_back(v);
  return out;
}

void KvSection::set(const std::string& key, std::string value) {
  for (auto& [k, v] : entries) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  entries.emplace_back(key, std::move(value));
}

void KvSection::set(const std::string& key, long value) { set(key, std::to_string(value)); }
void KvSection::set(const std::string& key, std::uint64_t value) { set(key, std::to_string(value)); }
void KvSection::set(const std::string& key, double value) { set(key, fmt_double(value)); }
void KvSection::add(const std::string& key, std::string value) {
  entries.emplace_back(key, std::move(value));
}

KvSection& KvFile::add_section(const std::string& name) {
  sections.push_back(KvSection{name, {}});
  return sections.back();
}

const KvSection* KvFile::find(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

void KvFile::write(std::ostream& os) const {
  auto dump = [&os](const KvSection& s) {
    for (const auto& [k, v] : s.entries) os << k << " = " << v << "\n";
  };
  dump(header);
  for (const auto& s : sections) {
    os << "[" << s.name << "]\n";
    dump(s);
  }
}

void KvFile::save(const std::filesystem::path& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open for writing: " + path.string());
  write(os);
  if (!os.flush()) throw IoError("write failed: " + path.string());
}

KvFile KvFile::parse(std::istream& is) {
  KvFile f;
  KvSection* cur = &f.header;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[') {
      if (t.back() != ']') throw FormatError("unterminated section at line " + std::to_string(lineno));
      cur = &f.add_section(trim(t.substr(1, t.size() - 2)));
      continue;
    }
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) throw FormatError("expected key = value at line " + std::to_string(lineno));
    cur->add(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  return f;
}

KvFile KvFile::load(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open: " + path.string());
  return parse(is);
}

} // namespace spad
