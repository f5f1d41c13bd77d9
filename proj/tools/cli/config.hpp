#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace envelope::cli {

/// Malformed configuration; `what()` carries the source, line and key.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `key = value` settings from a config file, overlaid with command-line
/// values. Every entry remembers where it came from for diagnostics.
class Config {
 public:
  /// Parses one `key = value` per line; `#` starts a comment.
  static Config parse(std::istream& in, std::string_view source);
  static Config load(const std::string& path);

  /// Later values win; command-line flags are applied this way.
  void set(const std::string& key, const std::string& value, const std::string& origin);

  bool has(const std::string& key) const { return entries_.count(key) != 0; }
  std::optional<std::string> text(const std::string& key) const;

  /// Typed lookups; malformed values raise ConfigError naming the key.
  std::optional<double> number(const std::string& key) const;
  std::optional<int> integer(const std::string& key) const;
  std::optional<bool> flag(const std::string& key) const;

  double number_or(const std::string& key, double fallback) const;
  int integer_or(const std::string& key, int fallback) const;

  /// Raises ConfigError for any key outside the recognised set.
  void require_known_keys() const;

  [[noreturn]] void fail(const std::string& key, const std::string& message) const;

 private:
  struct Entry {
    std::string value;
    std::string origin;
  };
  std::map<std::string, Entry> entries_;
};

/// Keys accepted in config files and as `key=value` arguments.
bool is_known_key(std::string_view key);

}  // namespace envelope::cli
