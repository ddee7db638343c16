// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace sbhclock {
namespace cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& raw) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(raw, &pos);
    if (pos != raw.size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: key '" + key + "' expects a number, got '" +
                      raw + "'");
  }
}

}  // namespace

RunConfig::RunConfig(std::string command, std::set<std::string> allowed_keys)
    : command_(std::move(command)), allowed_(std::move(allowed_keys)) {}

void RunConfig::check_key(const std::string& key) const {
  if (allowed_.find(key) == allowed_.end()) {
    throw ConfigError("config: unknown key '" + key + "' for command '" +
                      command_ + "'");
  }
}

void RunConfig::merge_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) {
    throw ConfigError("config: cannot read file '" + path + "'");
  }
  std::string line;
  int line_no = 0;
  while (std::getline(f, line)) {
    ++line_no;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line = line.substr(0, comment);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config: " + path + ":" + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError("config: " + path + ":" + std::to_string(line_no) +
                        ": empty key");
    }
    check_key(key);
    values_[key] = value;
  }
}

void RunConfig::merge_flag(const std::string& key, const std::string& value) {
  check_key(key);
  values_[key] = value;
}

bool RunConfig::has(const std::string& key) const {
  return values_.find(key) != values_.end();
}

std::string RunConfig::get_string(const std::string& key,
                                  const std::string& fallback) const {
  check_key(key);
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double RunConfig::get_double(const std::string& key, double fallback) const {
  check_key(key);
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  return parse_double(key, it->second);
}

int RunConfig::get_int(const std::string& key, int fallback) const {
  check_key(key);
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const std::string& raw = it->second;
  int v = 0;
  const auto res = std::from_chars(raw.data(), raw.data() + raw.size(), v);
  if (res.ec != std::errc() || res.ptr != raw.data() + raw.size()) {
    throw ConfigError("config: key '" + key + "' expects an integer, got '" +
                      raw + "'");
  }
  return v;
}

std::uint64_t RunConfig::get_uint64(const std::string& key,
                                    std::uint64_t fallback) const {
  check_key(key);
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const std::string& raw = it->second;
  std::uint64_t v = 0;
  const auto res = std::from_chars(raw.data(), raw.data() + raw.size(), v);
  if (res.ec != std::errc() || res.ptr != raw.data() + raw.size()) {
    throw ConfigError("config: key '" + key +
                      "' expects a nonnegative integer, got '" + raw + "'");
  }
  return v;
}

bool RunConfig::get_bool(const std::string& key, bool fallback) const {
  check_key(key);
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  std::string raw = it->second;
  std::transform(raw.begin(), raw.end(), raw.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (raw == "true" || raw == "1" || raw == "yes" || raw == "on") return true;
  if (raw == "false" || raw == "0" || raw == "no" || raw == "off") return false;
  throw ConfigError("config: key '" + key + "' expects a boolean, got '" +
                    it->second + "'");
}

std::vector<double> RunConfig::get_double_list(
    const std::string& key, const std::vector<double>& fallback) const {
  check_key(key);
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  std::vector<double> out;
  std::stringstream ss(it->second);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) {
      throw ConfigError("config: key '" + key + "' has an empty list entry");
    }
    out.push_back(parse_double(key, item));
  }
  if (out.empty()) {
    throw ConfigError("config: key '" + key + "' expects a nonempty list");
  }
  return out;
}

std::string RunConfig::echo() const {
  std::string out = "command: " + command_ + "\n";
  for (const auto& [k, v] : values_) {
    out += "  " + k + " = " + v + "\n";
  }
  return out;
}

const std::set<std::string>& common_keys() {
  static const std::set<std::string> keys = {"out", "units", "seed"};
  return keys;
}

std::set<std::string> allowed_keys_for(const std::string& command) {
  std::set<std::string> keys = common_keys();
  if (command == "algebra-check") {
    keys.insert({"K_list", "cutoff", "J", "n_random", "dump_matrices"});
  } else if (command == "crossover-scan") {
    keys.insert({"xi1_re", "xi1_im", "xi2_re", "xi2_im", "xi_re", "xi_im",
                 "K_list", "J", "tail_tol"});
  } else if (command == "thermal") {
    keys.insert({"xi_re", "xi_im", "J", "n_pairs"});
  } else if (command == "isotherm") {
    keys.insert({"T_target", "mass", "J", "n_pairs", "angles"});
  } else if (command == "geodesic-compare") {
    keys.insert({"mass", "m_probe", "q0_frac", "p0", "n_steps", "tau_factor"});
  } else if (command == "paw-demo") {
    keys.insert({"K", "d_xi", "J", "xi0_re", "xi0_im", "t_max", "n_t",
                 "threshold", "n_q", "m_probe", "accel"});
  } else {
    throw ConfigError(
        "unknown command '" + command +
        "'; expected one of algebra-check, crossover-scan, thermal, "
        "isotherm, geodesic-compare, paw-demo");
  }
  return keys;
}

RunConfig parse_command_line(int argc, const char* const* argv) {
  if (argc < 2) {
    throw ConfigError(
        "usage: sbhclock <command> [--config FILE] [--key=value ...]");
  }
  const std::string command = argv[1];
  RunConfig cfg(command, allowed_keys_for(command));
  // First pass applies config files in order, second pass the flags, so
  // flags always win regardless of position.
  std::vector<std::pair<std::string, std::string>> flags;
  for (int i = 2; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg.rfind("--", 0) != 0) {
      throw ConfigError("config: expected --key=value, got '" + arg + "'");
    }
    arg = arg.substr(2);
    std::string key, value;
    const auto eq = arg.find('=');
    if (eq != std::string::npos) {
      key = arg.substr(0, eq);
      value = arg.substr(eq + 1);
    } else {
      key = arg;
      if (i + 1 >= argc) {
        throw ConfigError("config: flag '--" + key + "' is missing a value");
      }
      value = argv[++i];
    }
    if (key == "config") {
      cfg.merge_file(value);
    } else {
      flags.emplace_back(key, value);
    }
  }
  for (const auto& [key, value] : flags) {
    cfg.merge_flag(key, value);
  }
  // Every command accepts --units; reject bad values before any work starts,
  // including in commands that never read the key.
  const std::string units = cfg.get_string("units", "natural");
  if (units != "natural" && units != "si") {
    throw ConfigError("config: key 'units' expects 'natural' or 'si', got '" +
                      units + "'");
  }
  return cfg;
}

}  // namespace cli
}  // namespace sbhclock
