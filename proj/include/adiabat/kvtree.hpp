#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace adiabat {

/// An ordered list of (dotted-key, value) pairs. This is the on-disk
/// format for both scenario configs and machine-readable summaries:
/// one `key = value` per line, `#` starts a comment, keys use dots to
/// express nesting. Emission order is insertion order, so identical
/// inputs produce byte-identical files.
class KvTree {
 public:
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, const char* value) { set(key, std::string(value)); }
  void set(const std::string& key, double value);
  void set(const std::string& key, long value);
  void set(const std::string& key, int value) { set(key, static_cast<long>(value)); }
  void set(const std::string& key, bool value);

  bool contains(const std::string& key) const;
  std::optional<std::string> get(const std::string& key) const;
  std::optional<double> get_double(const std::string& key) const;
  std::optional<long> get_long(const std::string& key) const;
  std::optional<bool> get_bool(const std::string& key) const;

  std::string get_or(const std::string& key, const std::string& fallback) const;
  double get_or(const std::string& key, double fallback) const;
  long get_or(const std::string& key, long fallback) const;
  bool get_or(const std::string& key, bool fallback) const;

  /// Typed getter that throws ConfigError when the key is absent.
  std::string require(const std::string& key) const;
  double require_double(const std::string& key) const;
  long require_long(const std::string& key) const;

  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string to_string() const;

  static KvTree parse(const std::string& text);
  static KvTree parse_file(const std::string& path);

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Deterministic short rendering of a double ("%.12g").
std::string format_double(double v);

/// Writes `content` to `path` atomically (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace adiabat
