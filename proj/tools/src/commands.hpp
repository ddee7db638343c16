// Copyright 2026 The sbhclock Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SBHCLOCK_TOOLS_COMMANDS_HPP_
#define SBHCLOCK_TOOLS_COMMANDS_HPP_

#include <string>
#include <vector>

#include "config.hpp"

namespace sbhclock {
namespace cli {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CommandResult {
  std::vector<CheckResult> checks;
  std::vector<std::string> artifacts;

  bool all_pass() const {
    for (const auto& c : checks) {
      if (!c.pass) return false;
    }
    return true;
  }
};

/// Dispatches to the command named in cfg.  Artifacts land under the
/// directory given by the 'out' key (created if needed).
CommandResult run_command(const RunConfig& cfg);

}  // namespace cli
}  // namespace sbhclock

#endif  // SBHCLOCK_TOOLS_COMMANDS_HPP_
