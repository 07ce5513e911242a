#include "adiabat/kvtree.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "adiabat/errors.hpp"

namespace adiabat {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void KvTree::set(const std::string& key, const std::string& value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  entries_.emplace_back(key, value);
}

void KvTree::set(const std::string& key, double value) { set(key, format_double(value)); }
void KvTree::set(const std::string& key, long value) { set(key, std::to_string(value)); }
void KvTree::set(const std::string& key, bool value) { set(key, value ? std::string("true") : std::string("false")); }

bool KvTree::contains(const std::string& key) const { return get(key).has_value(); }

std::optional<std::string> KvTree::get(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::optional<double> KvTree::get_double(const std::string& key) const {
  const auto v = get(key);
  if (!v) return std::nullopt;
  try {
    std::size_t pos = 0;
    const double d = std::stod(*v, &pos);
    if (pos != v->size()) throw std::invalid_argument("");
    return d;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "' is not a number: '" + *v + "'");
  }
}

std::optional<long> KvTree::get_long(const std::string& key) const {
  const auto v = get(key);
  if (!v) return std::nullopt;
  try {
    std::size_t pos = 0;
    const long n = std::stol(*v, &pos);
    if (pos != v->size()) throw std::invalid_argument("");
    return n;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "' is not an integer: '" + *v + "'");
  }
}

std::optional<bool> KvTree::get_bool(const std::string& key) const {
  const auto v = get(key);
  if (!v) return std::nullopt;
  if (*v == "true" || *v == "1" || *v == "yes") return true;
  if (*v == "false" || *v == "0" || *v == "no") return false;
  throw ConfigError("key '" + key + "' is not a boolean: '" + *v + "'");
}

std::string KvTree::get_or(const std::string& key, const std::string& fallback) const {
  return get(key).value_or(fallback);
}
double KvTree::get_or(const std::string& key, double fallback) const {
  return get_double(key).value_or(fallback);
}
long KvTree::get_or(const std::string& key, long fallback) const {
  return get_long(key).value_or(fallback);
}
bool KvTree::get_or(const std::string& key, bool fallback) const {
  return get_bool(key).value_or(fallback);
}

std::string KvTree::require(const std::string& key) const {
  const auto v = get(key);
  if (!v) throw ConfigError("missing required key '" + key + "'");
  return *v;
}
double KvTree::require_double(const std::string& key) const {
  const auto v = get_double(key);
  if (!v) throw ConfigError("missing required key '" + key + "'");
  return *v;
}
long KvTree::require_long(const std::string& key) const {
  const auto v = get_long(key);
  if (!v) throw ConfigError("missing required key '" + key + "'");
  return *v;
}

std::string KvTree::to_string() const {
  std::ostringstream os;
  for (const auto& [k, v] : entries_) os << k << " = " << v << "\n";
  return os.str();
}

KvTree KvTree::parse(const std::string& text) {
  KvTree out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto trimmed = trim(line);
    if (trimmed.empty()) continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    const auto key = trim(trimmed.substr(0, eq));
    const auto value = trim(trimmed.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    out.set(key, value);
  }
  return out;
}

KvTree KvTree::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write '" + tmp.string() + "'");
    out << content;
    if (!out.flush()) throw ConfigError("write failed for '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

}  // namespace adiabat
