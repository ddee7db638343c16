// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SBHCLOCK_TOOLS_CONFIG_HPP_
#define SBHCLOCK_TOOLS_CONFIG_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace sbhclock {
namespace cli {

/// Raised for malformed invocations: unknown command or key, unparsable
/// value, unreadable config file.  Mapped to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Resolved configuration of one run.  Precedence: built-in defaults, then
/// config file entries, then command-line flags.
class RunConfig {
 public:
  RunConfig(std::string command, std::set<std::string> allowed_keys);

  const std::string& command() const { return command_; }

  /// Merges `key = value` lines; '#' and ';' start comments.  Unknown keys
  /// are rejected by name.
  void merge_file(const std::string& path);

  /// Merges one --key=value (or --key value) pair, already split.
  void merge_flag(const std::string& key, const std::string& value);

  bool has(const std::string& key) const;

  std::string get_string(const std::string& key,
                         const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  int get_int(const std::string& key, int fallback) const;
  std::uint64_t get_uint64(const std::string& key,
                           std::uint64_t fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_double_list(const std::string& key,
                                      const std::vector<double>& fallback) const;

  /// Deterministic rendering of the resolved configuration, for the report.
  std::string echo() const;

 private:
  void check_key(const std::string& key) const;

  std::string command_;
  std::set<std::string> allowed_;
  std::map<std::string, std::string> values_;
};

/// Splits argv into (command, config path, flag pairs) and resolves the
/// final RunConfig for that command.
RunConfig parse_command_line(int argc, const char* const* argv);

/// Keys accepted by every command.
const std::set<std::string>& common_keys();

/// Full key set for one command; throws ConfigError for unknown commands.
std::set<std::string> allowed_keys_for(const std::string& command);

}  // namespace cli
}  // namespace sbhclock

#endif  // SBHCLOCK_TOOLS_CONFIG_HPP_
