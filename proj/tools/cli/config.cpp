#include "cli/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

namespace envelope::cli {

namespace {

constexpr std::array<std::string_view, 27> kKnownKeys = {
    "system", "N",     "D",     "m",      "a",     "b",     "V0",           "R",    "omega",
    "g",      "k",     "alpha_s", "nu",   "lambda", "q",    "n_sum",        "l_sum", "n",
    "l",      "phi",   "ground_shift", "emit", "axis", "start", "stop",     "count", "csv"};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

bool is_known_key(std::string_view key) {
  return std::find(kKnownKeys.begin(), kKnownKeys.end(), key) != kKnownKeys.end();
}

Config Config::parse(std::istream& in, std::string_view source) {
  Config cfg;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) {
      continue;
    }
    const std::string where = std::string(source) + ":" + std::to_string(number);
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(where + ": expected `key = value`, got `" + body + "`");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(where + ": missing key before `=`");
    }
    if (value.empty()) {
      throw ConfigError(where + ": key `" + key + "` has no value");
    }
    cfg.set(key, value, where);
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(path + ": cannot open config file");
  }
  return parse(in, path);
}

void Config::set(const std::string& key, const std::string& value, const std::string& origin) {
  entries_[key] = Entry{value, origin};
}

std::optional<std::string> Config::text(const std::string& key) const {
  const auto it = entries_.find(key);
  if (it == entries_.end()) {
    return std::nullopt;
  }
  return it->second.value;
}

void Config::fail(const std::string& key, const std::string& message) const {
  const auto it = entries_.find(key);
  const std::string where = it != entries_.end() ? it->second.origin : std::string("config");
  throw ConfigError(where + ": key `" + key + "`: " + message);
}

std::optional<double> Config::number(const std::string& key) const {
  const auto raw = text(key);
  if (!raw) {
    return std::nullopt;
  }
  std::istringstream is(*raw);
  is.imbue(std::locale::classic());
  double v = 0.0;
  is >> v;
  if (!is || !(is >> std::ws).eof()) {
    fail(key, "expected a number, got `" + *raw + "`");
  }
  return v;
}

std::optional<int> Config::integer(const std::string& key) const {
  const auto raw = text(key);
  if (!raw) {
    return std::nullopt;
  }
  int v = 0;
  const char* end = raw->data() + raw->size();
  const auto [ptr, ec] = std::from_chars(raw->data(), end, v);
  if (ec != std::errc() || ptr != end) {
    fail(key, "expected an integer, got `" + *raw + "`");
  }
  return v;
}

std::optional<bool> Config::flag(const std::string& key) const {
  const auto raw = text(key);
  if (!raw) {
    return std::nullopt;
  }
  std::string v = *raw;
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "1" || v == "true" || v == "yes" || v == "on") {
    return true;
  }
  if (v == "0" || v == "false" || v == "no" || v == "off") {
    return false;
  }
  fail(key, "expected a boolean, got `" + *raw + "`");
}

double Config::number_or(const std::string& key, double fallback) const {
  return number(key).value_or(fallback);
}

int Config::integer_or(const std::string& key, int fallback) const {
  return integer(key).value_or(fallback);
}

void Config::require_known_keys() const {
  for (const auto& [key, entry] : entries_) {
    if (!is_known_key(key)) {
      throw ConfigError(entry.origin + ": unknown key `" + key + "`");
    }
  }
}

}  // namespace envelope::cli
