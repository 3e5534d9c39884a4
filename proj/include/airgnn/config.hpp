#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace airgnn {

// Flat key/value experiment config. The on-disk format is one `key = value`
// line per entry with '#' comments; keys use dotted sections (env.*, model.*,
// train.*). A JSON mirror is emitted next to every output for tooling.
class Config {
 public:
  Config() = default;

  static Config parse(const std::string& text);
  static Config load(const std::string& path);

  bool has(const std::string& key) const;

  std::string get_str(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  // comma-separated list
  std::vector<double> get_list(const std::string& key,
                               const std::vector<double>& fallback) const;

  void set(const std::string& key, const std::string& value);
  void set_double(const std::string& key, double value);
  void set_int(const std::string& key, int64_t value);

  // Canonical text form: sorted keys, one per line. Hash and mirrors are
  // derived from this so identical configs always produce identical ids.
  std::string canonical_text() const;
  std::string json_mirror() const;
  uint64_t hash() const;

  void save(const std::string& path) const;
  void save_json_mirror(const std::string& path) const;

  const std::map<std::string, std::string>& entries() const { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace airgnn
