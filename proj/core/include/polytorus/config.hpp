#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace polytorus {

/// Flat key = value settings. Blank lines and lines starting with '#' are
/// ignored; keys and values are trimmed; a later key overrides an earlier one.
class Settings {
 public:
  /// Throws std::invalid_argument naming the line on malformed input.
  static Settings parse(std::string_view text);
  /// Throws std::runtime_error if the file cannot be read.
  static Settings load(const std::filesystem::path& path);

  bool contains(std::string_view key) const;
  std::optional<std::string> get(std::string_view key) const;
  void set(std::string key, std::string value);

  /// Typed lookups returning `fallback` when the key is absent; a present but
  /// unparsable value throws std::invalid_argument.
  std::string getString(std::string_view key, std::string fallback) const;
  double getDouble(std::string_view key, double fallback) const;
  std::int64_t getInt(std::string_view key, std::int64_t fallback) const;

  const std::map<std::string, std::string, std::less<>>& entries() const noexcept {
    return entries_;
  }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

}  // namespace polytorus
