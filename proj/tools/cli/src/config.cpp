#include "gsqg_cli/config.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gsqg/error.hpp"

namespace gsqg::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_number(const std::string& text, double& out) {
  if (text.empty()) return false;
  char* end = nullptr;
  errno = 0;
  out = std::strtod(text.c_str(), &end);
  return errno == 0 && end == text.c_str() + text.size();
}

bool valid_key(const std::string& key) {
  if (key.empty()) return false;
  for (char ch : key) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '.' || ch == '-')) return false;
  }
  return true;
}

}  // namespace

KeyValueConfig KeyValueConfig::parse(std::istream& in, const std::string& source) {
  KeyValueConfig cfg;
  cfg.source_ = source;
  std::string raw;
  std::string section;
  int line = 0;
  auto error = [&](const std::string& what) {
    throw Error(ErrorKind::parse_error, source + ":" + std::to_string(line) + ": " + what);
  };
  while (std::getline(in, raw)) {
    ++line;
    std::string text = raw;
    bool quoted = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '"') quoted = !quoted;
      if (text[i] == '#' && !quoted) {
        text.resize(i);
        break;
      }
    }
    text = trim(text);
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') error("unterminated section header");
      section = trim(text.substr(1, text.size() - 2));
      if (!valid_key(section)) error("invalid section name '" + section + "'");
      continue;
    }
    const auto eq = text.find('=');
    if (eq == std::string::npos) error("expected key = value");
    const std::string key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    if (!valid_key(key)) error("invalid key '" + key + "'");
    if (value.empty()) error("missing value for '" + key + "'");
    if (value.front() == '"') {
      if (value.size() < 2 || value.back() != '"') error("unterminated string for '" + key + "'");
      value = value.substr(1, value.size() - 2);
    } else if (value.front() == '[' && value.back() != ']') {
      error("unterminated list for '" + key + "'");
    }
    const std::string full = section.empty() ? key : section + "." + key;
    if (cfg.values_.count(full)) error("duplicate key '" + full + "'");
    cfg.values_[full] = Entry{value, line};
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot open config file " + path);
  return parse(in, path);
}

void KeyValueConfig::fail(const std::string& key, const std::string& what) const {
  const auto it = values_.find(key);
  const int line = it == values_.end() ? 0 : it->second.line;
  throw Error(ErrorKind::parse_error, source_ + ":" + std::to_string(line) + ": " + key + ": " + what);
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  double v = 0.0;
  if (!parse_number(it->second.value, v)) fail(key, "expected a number, got '" + it->second.value + "'");
  return v;
}

int KeyValueConfig::get_int(const std::string& key, int fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  double v = 0.0;
  if (!parse_number(it->second.value, v) || v != static_cast<double>(static_cast<long long>(v)) ||
      std::abs(v) > 2e9) {
    fail(key, "expected an integer, got '" + it->second.value + "'");
  }
  return static_cast<int>(v);
}

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second.value;
}

std::vector<double> KeyValueConfig::get_list(const std::string& key, const std::vector<double>& fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  std::string text = it->second.value;
  if (!text.empty() && text.front() == '[') text = text.substr(1, text.size() - 2);
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    double v = 0.0;
    if (!parse_number(item, v)) fail(key, "expected a list of numbers, got '" + item + "'");
    out.push_back(v);
  }
  return out;
}

void KeyValueConfig::set(const std::string& key, const std::string& value) { values_[key] = Entry{value, 0}; }

void KeyValueConfig::require_known(const std::set<std::string>& known) const {
  for (const auto& [key, entry] : values_) {
    if (!known.count(key)) fail(key, "unknown key");
  }
}

}  // namespace gsqg::cli
