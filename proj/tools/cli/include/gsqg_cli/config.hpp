#pragma once

#include <istream>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace gsqg::cli {

/// Flat key = value file. `[section]` headers prefix the keys that follow with
/// "section."; `#` starts a comment; values are numbers, bare words, quoted
/// strings or bracketed lists of numbers.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::istream& in, const std::string& source = "<config>");
  static KeyValueConfig from_file(const std::string& path);

  bool has(const std::string& key) const { return values_.count(key) > 0; }
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::vector<double> get_list(const std::string& key, const std::vector<double>& fallback) const;

  void set(const std::string& key, const std::string& value);
  /// Throws parse-error naming the line of the first key outside `known`.
  void require_known(const std::set<std::string>& known) const;
  const std::string& source() const { return source_; }

 private:
  struct Entry {
    std::string value;
    int line = 0;
  };
  [[noreturn]] void fail(const std::string& key, const std::string& what) const;

  std::string source_;
  std::map<std::string, Entry> values_;
};

}  // namespace gsqg::cli
