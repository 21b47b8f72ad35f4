#pragma once

// Layered settings: command-line flags > KCHAIN_* environment variables >
// key=value config file > built-in defaults.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <string>

#include "kchain/errors.hpp"

namespace kchain::harness {

using SettingMap = std::map<std::string, std::string>;

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

/// Reads `key = value` lines; blank lines and lines starting with '#' are skipped.
inline SettingMap read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config file '" + path + "'");
  SettingMap out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument(path + ":" + std::to_string(lineno) + ": expected key=value");
    }
    out[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
  }
  return out;
}

/// KCHAIN_MAX_N for key "max_n".
inline std::string env_name(const std::string& key) {
  std::string name = "KCHAIN_";
  for (char c : key) name += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return name;
}

/// Resolves every key present in `defaults`. `config_path` may be empty, in
/// which case KCHAIN_CONFIG is consulted.
inline SettingMap resolve_settings(const SettingMap& defaults, std::string config_path,
                                   const SettingMap& flags) {
  SettingMap out = defaults;
  if (config_path.empty()) {
    if (const char* p = std::getenv("KCHAIN_CONFIG")) config_path = p;
  }
  if (!config_path.empty()) {
    for (const auto& [key, value] : read_config_file(config_path)) {
      if (!defaults.contains(key)) throw InvalidArgument("unknown config key '" + key + "'");
      out[key] = value;
    }
  }
  for (const auto& [key, value] : defaults) {
    if (const char* v = std::getenv(env_name(key).c_str())) out[key] = v;
  }
  for (const auto& [key, value] : flags) out[key] = value;
  return out;
}

inline long long setting_as_int(const SettingMap& s, const std::string& key) {
  const std::string& text = s.at(key);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InvalidArgument("setting '" + key + "' is not an integer: '" + text + "'");
  }
}

}  // namespace kchain::harness
